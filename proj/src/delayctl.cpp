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

#include "otma/delayctl.hpp"

#include <cmath>
#include <string>

#include "otma/errors.hpp"
#include "otma/math_util.hpp"

namespace otma
{

int num_delays(const tma_config &cfg)
{
    validate(cfg);
    return cfg.period_slots();
}

double delay_phase(const tma_config &cfg, long long harmonic, int delay)
{
    validate(cfg);
    const int d_count = cfg.period_slots();
    if (delay < 0 || delay >= d_count)
        throw_error(error_code::delay_out_of_range,
                    "delay_phase: delay " + std::to_string(delay) + " outside [0, " +
                        std::to_string(d_count) + ")");
    double line = 1.0 + static_cast<double>(cfg.n_phases) * static_cast<double>(harmonic);
    double phi = -two_pi * static_cast<double>(delay) / static_cast<double>(d_count) * line;
    return wrap_phase(phi);
}

double phase_resolution(const tma_config &cfg)
{
    return two_pi / static_cast<double>(num_delays(cfg));
}

double effective_bits(const tma_config &cfg)
{
    return std::log2(static_cast<double>(num_delays(cfg)));
}

} // namespace otma
