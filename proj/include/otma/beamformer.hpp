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
#include <vector>

#include "config.hpp"
#include "math_util.hpp"

namespace otma
{

// Array-factor evaluation mode. The simplified form drops the per-harmonic
// frequency offset from the propagation term, valid while that offset is
// far below the carrier; the exact form keeps it.
enum class af_mode
{
    simplified,
    exact
};

// Complex array factor of one harmonic over an angle grid, one row per
// requested harmonic index.
struct beam_pattern
{
    std::vector<double> angles_deg;           // strictly increasing grid
    std::vector<long long> harmonics;         // row order
    std::vector<std::vector<cdouble>> values; // [harmonic row][angle]
    int delay = 0;
    tma_config cfg;
    array_config acfg;
};

// Phase shift applied by the schedule delay chain at antenna m for replica i
// under a progressive per-element delay of d slots:
// -2*pi*m*d*(1/D + i/o_tau), wrapped to (-pi, pi].
double antenna_phase(const tma_config &cfg, int antenna, long long harmonic, int delay);

// Array factor of a uniform linear array at angle theta for replica i and
// progressive delay d. Normalized by 1/sqrt(M).
cdouble array_factor(const array_config &acfg, const tma_config &cfg, double theta_deg,
                     long long harmonic, int delay, af_mode mode = af_mode::simplified);

// Angle the delay steers replica i to: -arcsin(d*(1+i*N) / (D*spacing_wl)),
// or nullopt when the argument leaves [-1, 1] (no physical direction).
std::optional<double> beam_direction(const tma_config &cfg, const array_config &acfg,
                                     long long harmonic, int delay);

// Evaluate the array factor over a uniform angle grid covering [-90, 90] for
// each requested harmonic. Optional per-antenna taper levels replace the
// uniform replica coefficient with each element's tapered coefficient
// (magnitude and phase); optional per-antenna delays override the
// progressive m*d schedule shifts.
beam_pattern beampattern_sweep(const array_config &acfg, const tma_config &cfg, int delay,
                               const std::vector<long long> &harmonics, double grid_step_deg,
                               const std::vector<int> &taper_zeros = {},
                               const std::vector<int> &delay_override = {},
                               af_mode mode = af_mode::simplified);

} // namespace otma
