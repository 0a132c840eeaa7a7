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

#include <cstdint>
#include <vector>

#include "config.hpp"
#include "waveform.hpp"

namespace otma
{

// One spectral replica of the modulated signal.
struct replica_entry
{
    long long harmonic = 0;      // replica index i
    double center_freq_hz = 0.0; // where the shifted baseband copy sits
    cdouble weight = {0.0, 0.0}; // complex scale of that copy
};

// Predicted or measured set of replicas of a band-limited input.
struct replica_spectrum
{
    std::vector<replica_entry> entries;
    double band_hz = 0.0; // two-sided baseband bandwidth B
};

// Deterministic band-limited test signal: pseudo-random unit-modulus
// quadrature symbols at the baseband rate, circularly band-limited
// interpolation to rate K * f_sw, unit average power. The symbol count is
// rounded up so the window spans an integer number of schedule periods
// (every spectral line then falls on a DFT bin).
sampled_waveform make_test_baseband(const tma_config &cfg, int n_symbols, std::uint64_t seed,
                                    int samples_per_slot);

// Same pipeline with a constant all-ones symbol stream (single DC line).
sampled_waveform make_constant_baseband(const tma_config &cfg, int n_symbols,
                                        int samples_per_slot);

// Pointwise product of s with the (delayed, tapered) schedule waveform,
// repeated periodically. s.rate must be an integer multiple of the switching
// rate.
sampled_waveform modulate(const sampled_waveform &s, const tma_config &cfg, int delay = 0,
                          int taper_zeros = 0);

// Replicas predicted by the closed-form coefficients: weight(i) =
// harmonic_coefficient(i) * e^{j*delay_phase(i,d)}, |i| <= i_max.
replica_spectrum predict_replicas(const tma_config &cfg, int delay, int i_max);

// Exact replica set of the *sampled* schedule: one entry per discrete
// spectral line of the slot waveform (k = 1 mod N lines only; the rest are
// identically zero). Unlike predict_replicas this set is complete — summing
// these copies reconstructs the modulated spectrum to rounding error.
replica_spectrum sampled_replicas(const tma_config &cfg, int delay, int taper_zeros,
                                  int samples_per_slot);

// Power fraction of the sampled-schedule spectrum NOT covered by `rep`
// (0 when rep holds the complete line set). Used to bound truncation.
double truncated_power_fraction(const tma_config &cfg, int delay, int taper_zeros,
                                int samples_per_slot, const replica_spectrum &rep);

// Relative L2 error between the spectrum of y and the predicted sum of
// weight-scaled, frequency-shifted copies of the spectrum of s. All replica
// centers must fall on DFT bins of the common window.
double verify_replicas(const sampled_waveform &y, const replica_spectrum &predicted,
                       const sampled_waveform &s);

} // namespace otma
