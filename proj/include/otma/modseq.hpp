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

#include "config.hpp"
#include "math_util.hpp"

namespace otma
{

// Slot value marking a switched-off (zero-amplitude) switching slot.
constexpr int off_slot = -1;

// One period of a switch-state schedule at switching-slot granularity.
//
// slots[r] is the phase-state index driven during slot r, or off_slot.
// The schedule is periodic with period slots.size() == n_phases * o_tau.
struct switch_schedule
{
    std::vector<int> slots;     // state index per slot, off_slot = open switch
    double slot_duration = 0.0; // seconds per slot
    int n_phases = 0;           // phase-state count the indices refer to

    int period_slots() const { return static_cast<int>(slots.size()); }
};

// Phase of state n out of n_phases uniformly spaced states: 2*pi*n/n_phases.
double state_phase(int n_phases, int state);

// Build one period of the modulating schedule: each of the n_phases states is
// held for o_tau consecutive slots in ascending order, the last `taper_zeros`
// slots of every pulse are switched off, and the whole period is cyclically
// right-shifted by `delay` slots.
switch_schedule build_schedule(const tma_config &cfg, int delay = 0, int taper_zeros = 0);

// Fourier-series coefficient (line k of the schedule period) contributed by a
// single pulse at phase state `state`, taking the pulse duration as the
// averaging window: e^{j*state_phase} * sinc(pi*k/N) * e^{-j*pi*k/N}.
cdouble pulse_coefficient(int n_phases, int state, long long k);

// Fourier-series coefficient of the full modulating sequence at line k.
// Nonzero only for k = 1 (mod n_phases); there it equals
// sinc(pi*k/N) * e^{-j*pi*k/N}.
cdouble sequence_coefficient(int n_phases, long long k);

// Coefficient of the i-th spectral replica, i.e. sequence_coefficient at
// line k = 1 + i*n_phases. i = 0 is the main (wanted) replica.
cdouble harmonic_coefficient(int n_phases, long long i);

// Power of the i-th replica relative to the modulated signal, in dB:
// 10*log10(|harmonic_coefficient|^2).
double harmonic_power_db(int n_phases, long long i);

// Replica line of an analytic schedule spectrum.
struct harmonic_entry
{
    long long harmonic = 0;     // replica index i
    double freq_hz = 0.0;       // absolute line frequency f_mod + i*f_p
    cdouble coeff = {0.0, 0.0}; // complex coefficient
};

// All replica lines with |i| <= i_max for the given configuration.
struct harmonic_spectrum
{
    std::vector<harmonic_entry> entries; // ascending in harmonic index
    int i_max = 0;
};

harmonic_spectrum spectrum(const tma_config &cfg, int i_max);

} // namespace otma
