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

#include "config.hpp"

namespace otma
{

// Number of distinct cyclic delays D = n_phases * o_tau.
int num_delays(const tma_config &cfg);

// Phase imposed on replica i by a cyclic delay of d slots:
// -2*pi*(d/D)*(1 + n_phases*i), wrapped to (-pi, pi].
double delay_phase(const tma_config &cfg, long long harmonic, int delay);

// Main-replica phase step between adjacent delays, 2*pi/D.
double phase_resolution(const tma_config &cfg);

// Effective number of phase-shifter bits, log2(D).
double effective_bits(const tma_config &cfg);

} // namespace otma
