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

#include "otma/oracle.hpp"

#include <algorithm>

#include "otma/dft.hpp"
#include "otma/errors.hpp"

namespace otma
{

cdouble oracle_result::coefficient(long long k) const
{
    const long long L = static_cast<long long>(bins.size());
    if (L == 0)
        return {0.0, 0.0};
    cdouble bin = bins[static_cast<std::size_t>(mod_floor(k, L))];
    if (!zoh_corrected)
        return bin;
    double x = pi * static_cast<double>(k) / static_cast<double>(L);
    return bin * sinc(x) * cis(-x);
}

sampled_waveform sample_schedule(const switch_schedule &sched, int samples_per_slot)
{
    if (samples_per_slot < 1)
        throw_error(error_code::non_positive_parameter,
                    "sample_schedule: samples_per_slot must be >= 1");
    if (sched.slots.empty() || sched.slot_duration <= 0.0 || sched.n_phases < 1)
        throw_error(error_code::invalid_config, "sample_schedule: malformed schedule");

    sampled_waveform w;
    w.rate = static_cast<double>(samples_per_slot) / sched.slot_duration;
    w.samples.reserve(sched.slots.size() * static_cast<std::size_t>(samples_per_slot));
    for (int s : sched.slots)
    {
        cdouble v = (s == off_slot) ? cdouble{0.0, 0.0} : cis(state_phase(sched.n_phases, s));
        for (int r = 0; r < samples_per_slot; r++)
            w.samples.push_back(v);
    }
    return w;
}

oracle_result dft_coefficients(const sampled_waveform &w, bool zoh_correction)
{
    if (w.samples.empty())
        throw_error(error_code::invalid_argument, "dft_coefficients: empty waveform");

    oracle_result res;
    res.bins = dft(w.samples);
    const double inv = 1.0 / static_cast<double>(res.bins.size());
    for (cdouble &v : res.bins)
        v *= inv;
    res.resolution_hz = w.rate * inv;
    res.zoh_corrected = zoh_correction;
    return res;
}

oracle_result schedule_coefficients(const switch_schedule &sched, int samples_per_slot,
                                    bool zoh_correction)
{
    oracle_result res = dft_coefficients(sample_schedule(sched, samples_per_slot), zoh_correction);
    res.samples_per_slot = samples_per_slot;
    return res;
}

double compare(const std::vector<std::pair<long long, cdouble>> &analytic,
               const oracle_result &oracle)
{
    double worst = 0.0;
    for (const auto &[k, value] : analytic)
        worst = std::max(worst, std::abs(value - oracle.coefficient(k)));
    return worst;
}

} // namespace otma
