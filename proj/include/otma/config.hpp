// SPDX-License-Identifier: Apache-2.0
//
// otma - oversampled time-modulated array simulation library
// Copyright (C) 2026 otma developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <optional>
#include <string>

namespace otma
{

// Parameters of one time-modulated transmit chain.
//
// The switching hardware cycles through n_phases discrete phase states. The
// switching clock runs oversampling() times faster than the baseband sample
// rate; o_f stretches the modulation period in frequency and o_tau subdivides
// each phase pulse into o_tau switching slots (the handle used for cyclic
// delays and zero-insertion tapering).
struct tma_config
{
    int n_phases = 4;         // number of phase states N (>= 2)
    int o_f = 1;              // frequency oversampling factor (>= 1)
    int o_tau = 1;            // pulse-subdivision oversampling factor (>= 1)
    double sample_rate = 1.0; // baseband sample rate f_s in Hz (> 0)

    // Derived quantities. All follow from the four stored fields.
    int oversampling() const { return o_f * o_tau; }                    // total oversampling O
    double switch_rate() const { return oversampling() * sample_rate; } // switching clock f_sw
    double slot_duration() const { return 1.0 / switch_rate(); }        // one switching slot T_sw
    double pulse_duration() const { return o_tau / switch_rate(); }     // one phase pulse T_p
    double pulse_rate() const { return o_f * sample_rate; }             // pulse repetition rate f_p
    double mod_rate() const { return pulse_rate() / n_phases; }         // modulation fundamental f_mod
    int period_slots() const { return n_phases * o_tau; }               // slots per modulation period
};

// Uniform linear transmit array fed by identically configured chains.
struct array_config
{
    int n_antennas = 8;        // number of elements M (>= 1)
    double spacing_wl = 0.5;   // element spacing in carrier wavelengths (> 0)
    double carrier_freq = 1e9; // carrier frequency in Hz (> 0)
};

// Validate and return the configuration; throws otma::error on bad fields.
const tma_config &validate(const tma_config &cfg);
const array_config &validate(const array_config &cfg);

// Parse a configuration from JSON text / file. Unknown keys are rejected.
// The "array" block is optional; absent means loaded.second == nullopt.
struct loaded_config
{
    tma_config tma;
    std::optional<array_config> array;
};
loaded_config config_from_json(const std::string &json_text);
loaded_config config_from_file(const std::string &path);
std::string config_to_json(const tma_config &cfg, const std::optional<array_config> &array);

} // namespace otma
