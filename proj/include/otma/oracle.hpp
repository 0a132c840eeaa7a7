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

#include <utility>
#include <vector>

#include "modseq.hpp"
#include "waveform.hpp"

namespace otma
{

// Brute-force spectral ground truth for one period of a sampled waveform.
//
// bins holds the plain normalized DFT (bin b value = (1/L) sum_t x[t] e^{-j
// 2 pi b t / L}). When zoh_corrected is set, coefficient(k) additionally
// applies the exact zero-order-hold factor e^{-j pi k / L} * sinc(pi k / L),
// which turns the slot-sampled DFT into the continuous-time Fourier-series
// coefficient of the piecewise-constant waveform — exact for every integer k,
// independent of the sampling density.
struct oracle_result
{
    std::vector<cdouble> bins;  // plain normalized DFT over one period
    double resolution_hz = 0.0; // line spacing rate/L
    int samples_per_slot = 1;
    bool zoh_corrected = true;

    std::size_t size() const { return bins.size(); }

    // Fourier coefficient at integer line k (any k; bins repeat mod L and the
    // hold correction supplies the inter-period roll-off).
    cdouble coefficient(long long k) const;
};

// Piecewise-constant realization of a schedule: K samples per slot, each
// e^{j*state_phase} for an active slot and 0 for an OFF slot.
sampled_waveform sample_schedule(const switch_schedule &sched, int samples_per_slot);

// Normalized DFT of one waveform period; see oracle_result for the
// zero-order-hold correction toggle.
oracle_result dft_coefficients(const sampled_waveform &w, bool zoh_correction = true);

// sample_schedule + dft_coefficients in one step, recording samples_per_slot.
oracle_result schedule_coefficients(const switch_schedule &sched, int samples_per_slot,
                                    bool zoh_correction = true);

// Max absolute coefficient error between analytic (k, value) pairs and the
// oracle at the same lines.
double compare(const std::vector<std::pair<long long, cdouble>> &analytic,
               const oracle_result &oracle);

} // namespace otma
