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

// Forward DFT, X[b] = sum_t x[t] e^{-j 2 pi b t / L}. Radix-2 for powers of
// two, direct evaluation otherwise. No normalization.
std::vector<cdouble> dft(const std::vector<cdouble> &x);

// Inverse DFT with 1/L normalization; idft(dft(x)) == x up to rounding.
std::vector<cdouble> idft(const std::vector<cdouble> &x);

} // namespace otma
