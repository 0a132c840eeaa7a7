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

#include "otma/taper.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "otma/errors.hpp"
#include "otma/modseq.hpp"

namespace otma
{

static void check_taper_args(int o_tau, int zeros, const char *who)
{
    if (o_tau < 1)
        throw_error(error_code::non_positive_parameter, std::string(who) + ": o_tau must be >= 1");
    if (zeros < 0 || zeros > o_tau)
        throw_error(error_code::taper_out_of_range,
                    std::string(who) + ": zeros " + std::to_string(zeros) + " outside [0, " +
                        std::to_string(o_tau) + "]");
}

double duty_factor(int o_tau, int zeros)
{
    check_taper_args(o_tau, zeros, "duty_factor");
    return static_cast<double>(o_tau - zeros) / static_cast<double>(o_tau);
}

std::vector<double> amplitude_levels(int o_tau)
{
    if (o_tau < 1)
        throw_error(error_code::non_positive_parameter, "amplitude_levels: o_tau must be >= 1");
    std::vector<double> levels(static_cast<std::size_t>(o_tau) + 1);
    for (int l = 0; l <= o_tau; l++)
        levels[static_cast<std::size_t>(l)] =
            static_cast<double>(l) / static_cast<double>(o_tau);
    return levels;
}

cdouble tapered_coefficient(int n_phases, long long k, int o_tau, int zeros)
{
    check_taper_args(o_tau, zeros, "tapered_coefficient");
    if (n_phases < 1)
        throw_error(error_code::non_positive_parameter, "tapered_coefficient: n_phases must be >= 1");
    if (mod_floor(k, n_phases) != 1 % n_phases)
        return {0.0, 0.0};
    double eta = duty_factor(o_tau, zeros);
    double x = pi * static_cast<double>(k) * eta / static_cast<double>(n_phases);
    return eta * sinc(x) * cis(-x);
}

double taper_phase_offset(int n_phases, long long k, int o_tau, int zeros)
{
    check_taper_args(o_tau, zeros, "taper_phase_offset");
    if (n_phases < 1)
        throw_error(error_code::non_positive_parameter, "taper_phase_offset: n_phases must be >= 1");
    double eta = duty_factor(o_tau, zeros);
    return -pi * static_cast<double>(k) / static_cast<double>(n_phases) * (eta - 1.0);
}

double worst_case_harmonic_gain_db(int n_phases, int o_tau, int i_max)
{
    if (n_phases < 2)
        throw_error(error_code::phase_count_too_small,
                    "worst_case_harmonic_gain_db: n_phases must be >= 2");
    if (o_tau < 2)
        throw_error(error_code::no_taper_levels,
                    "worst_case_harmonic_gain_db: o_tau must be >= 2 to have taper levels");
    if (i_max < 1)
        throw_error(error_code::invalid_argument, "worst_case_harmonic_gain_db: i_max must be >= 1");

    // Full-off (zeros = o_tau) kills the replica entirely and full-on is the
    // reference, so only the intermediate levels can raise a replica.
    double worst = -std::numeric_limits<double>::infinity();
    for (int zeros = 1; zeros < o_tau; zeros++)
        for (long long i = -i_max; i <= i_max; i++)
        {
            if (i == 0)
                continue;
            long long k = 1 + i * n_phases;
            double ref = std::norm(sequence_coefficient(n_phases, k));
            double tap = std::norm(tapered_coefficient(n_phases, k, o_tau, zeros));
            worst = std::max(worst, pow2db(tap / ref));
        }
    return worst;
}

} // namespace otma
