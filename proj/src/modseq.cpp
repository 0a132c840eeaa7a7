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

#include "otma/modseq.hpp"

#include <string>

#include "otma/errors.hpp"

namespace otma
{

double state_phase(int n_phases, int state)
{
    if (n_phases < 1)
        throw_error(error_code::non_positive_parameter, "state_phase: n_phases must be >= 1");
    if (state < 0 || state >= n_phases)
        throw_error(error_code::index_out_of_range,
                    "state_phase: state " + std::to_string(state) + " outside [0, " +
                        std::to_string(n_phases) + ")");
    return two_pi * static_cast<double>(state) / static_cast<double>(n_phases);
}

switch_schedule build_schedule(const tma_config &cfg, int delay, int taper_zeros)
{
    validate(cfg);
    const int period = cfg.period_slots();
    if (delay < 0 || delay >= period)
        throw_error(error_code::delay_out_of_range,
                    "build_schedule: delay " + std::to_string(delay) + " outside [0, " +
                        std::to_string(period) + ")");
    if (taper_zeros < 0 || taper_zeros > cfg.o_tau)
        throw_error(error_code::taper_out_of_range,
                    "build_schedule: taper_zeros " + std::to_string(taper_zeros) +
                        " outside [0, " + std::to_string(cfg.o_tau) + "]");

    switch_schedule sched;
    sched.slots.assign(static_cast<std::size_t>(period), off_slot);
    sched.slot_duration = cfg.slot_duration();
    sched.n_phases = cfg.n_phases;

    const int active = cfg.o_tau - taper_zeros; // leading active slots per pulse
    for (int n = 0; n < cfg.n_phases; n++)
        for (int r = 0; r < cfg.o_tau; r++)
        {
            int src = n * cfg.o_tau + r;
            int dst = (src + delay) % period;
            sched.slots[static_cast<std::size_t>(dst)] = (r < active) ? n : off_slot;
        }
    return sched;
}

cdouble pulse_coefficient(int n_phases, int state, long long k)
{
    double phase = state_phase(n_phases, state); // validates n_phases and state
    double x = pi * static_cast<double>(k) / static_cast<double>(n_phases);
    return cis(phase) * sinc(x) * cis(-x);
}

cdouble sequence_coefficient(int n_phases, long long k)
{
    if (n_phases < 1)
        throw_error(error_code::non_positive_parameter, "sequence_coefficient: n_phases must be >= 1");
    if (mod_floor(k, n_phases) != 1 % n_phases)
        return {0.0, 0.0};
    double x = pi * static_cast<double>(k) / static_cast<double>(n_phases);
    return sinc(x) * cis(-x);
}

cdouble harmonic_coefficient(int n_phases, long long i)
{
    if (n_phases < 1)
        throw_error(error_code::non_positive_parameter, "harmonic_coefficient: n_phases must be >= 1");
    return sequence_coefficient(n_phases, 1 + i * n_phases);
}

double harmonic_power_db(int n_phases, long long i)
{
    return pow2db(std::norm(harmonic_coefficient(n_phases, i)));
}

harmonic_spectrum spectrum(const tma_config &cfg, int i_max)
{
    validate(cfg);
    if (i_max < 0)
        throw_error(error_code::invalid_argument, "spectrum: i_max must be >= 0");

    harmonic_spectrum sp;
    sp.i_max = i_max;
    sp.entries.reserve(static_cast<std::size_t>(2 * i_max + 1));
    const double f_mod = cfg.mod_rate();
    const double f_p = cfg.pulse_rate();
    for (long long i = -i_max; i <= i_max; i++)
    {
        harmonic_entry e;
        e.harmonic = i;
        e.freq_hz = f_mod + static_cast<double>(i) * f_p;
        e.coeff = harmonic_coefficient(cfg.n_phases, i);
        sp.entries.push_back(e);
    }
    return sp;
}

} // namespace otma
