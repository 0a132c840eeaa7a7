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

// Uniformly sampled complex baseband signal.
struct sampled_waveform
{
    std::vector<cdouble> samples;
    double rate = 0.0; // samples per second

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / rate; }

    // Mean of |x[t]|^2 over the window.
    double mean_power() const
    {
        if (samples.empty())
            return 0.0;
        double acc = 0.0;
        for (const cdouble &v : samples)
            acc += std::norm(v);
        return acc / static_cast<double>(samples.size());
    }
};

} // namespace otma
