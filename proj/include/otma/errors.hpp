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

#include <stdexcept>
#include <string>

namespace otma
{

enum class error_code
{
    none = 0,
    invalid_argument,       // generic bad input
    non_positive_parameter, // a count or rate that must be > 0 was not
    phase_count_too_small,  // fewer than 2 phase states
    index_out_of_range,     // state / antenna / harmonic index outside its domain
    delay_out_of_range,     // cyclic delay outside [0, n_phases * o_tau)
    taper_out_of_range,     // zeroed-slot count outside [0, o_tau]
    rate_mismatch,          // waveform sample rate incompatible with the switching rate
    no_taper_levels,        // operation needs o_tau >= 2 to have any taper levels
    invalid_grid,           // malformed sweep grid (e.g. non-positive step)
    invalid_config,         // structurally bad configuration object
    json_error,             // malformed or mistyped JSON input
    io_error                // file could not be read or written
};

// Exception carrying a machine-readable code next to the human-readable text.
class error : public std::runtime_error
{
  public:
    error(error_code code, const std::string &what) : std::runtime_error(what), code_(code) {}
    error_code code() const noexcept { return code_; }

  private:
    error_code code_;
};

[[noreturn]] inline void throw_error(error_code code, const std::string &what)
{
    throw error(code, what);
}

} // namespace otma
