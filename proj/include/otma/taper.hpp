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

#include <vector>

#include "math_util.hpp"

namespace otma
{

// Duty factor of a pulse with `zeros` of its o_tau slots switched off:
// (o_tau - zeros) / o_tau. zeros = 0 means full amplitude 1.
double duty_factor(int o_tau, int zeros);

// Realizable per-antenna amplitude levels {0, 1/o_tau, ..., 1}, ascending.
std::vector<double> amplitude_levels(int o_tau);

// Fourier-series coefficient of the tapered modulating sequence at line k,
// with `zeros` trailing slots of each pulse switched off:
// eta * sinc(pi*k*eta/N) * e^{-j*pi*k*eta/N} on the k = 1 (mod N) lines.
cdouble tapered_coefficient(int n_phases, long long k, int o_tau, int zeros);

// Phase of the tapered coefficient relative to the untapered one at line k:
// -pi*(k/N)*(eta - 1).
double taper_phase_offset(int n_phases, long long k, int o_tau, int zeros);

// Largest power gain (dB) that tapering can give an undesired replica
// relative to its untapered level: max over zeros in [1, o_tau-1] and
// replicas i != 0, |i| <= i_max of 10*log10(|C_t(1+iN)|^2 / |C(1+iN)|^2).
double worst_case_harmonic_gain_db(int n_phases, int o_tau, int i_max);

} // namespace otma
