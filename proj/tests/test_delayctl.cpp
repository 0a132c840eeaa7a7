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

#include <cmath>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "otma/delayctl.hpp"
#include "otma/errors.hpp"
#include "otma/math_util.hpp"

using namespace otma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

tma_config cfg_of(int n, int o_tau)
{
    tma_config cfg;
    cfg.n_phases = n;
    cfg.o_tau = o_tau;
    cfg.sample_rate = 1e6;
    return cfg;
}

} // namespace

TEST_CASE("delay count equals phase states times pulse subdivisions")
{
    CHECK(num_delays(cfg_of(4, 1)) == 4);
    CHECK(num_delays(cfg_of(4, 4)) == 16);
    CHECK(num_delays(cfg_of(8, 2)) == 16);
}

TEST_CASE("main-replica delay phase frozen reference values")
{
    tma_config cfg = cfg_of(4, 2); // D = 8
    CHECK_THAT(delay_phase(cfg, 0, 1), WithinAbs(-pi / 4, 1e-15));
    // On the adjacent replica the same delay flips into the opposite
    // half-plane: -2*pi*(1/8)*(1 - 4) wrapped.
    CHECK_THAT(delay_phase(cfg, -1, 1), WithinAbs(3 * pi / 4, 1e-15));
    CHECK_THAT(delay_phase(cfg, 0, 0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("main-replica phases are uniform and exhaust the circle")
{
    tma_config cfg = cfg_of(4, 4); // D = 16
    const int d_count = num_delays(cfg);
    std::set<long long> distinct;
    for (int d = 0; d < d_count; d++)
    {
        double phase = delay_phase(cfg, 0, d);
        CHECK(phase > -pi - 1e-12);
        CHECK(phase <= pi + 1e-12);
        // expected: -2*pi*d/D wrapped into (-pi, pi]
        double want = wrap_phase(-two_pi * d / d_count);
        CHECK_THAT(phase, WithinAbs(want, 1e-12));
        distinct.insert(std::llround(phase * 1e12));
    }
    CHECK(distinct.size() == static_cast<std::size_t>(d_count));
}

TEST_CASE("phase step and effective resolution bits")
{
    CHECK_THAT(phase_resolution(cfg_of(4, 4)), WithinRel(two_pi / 16, 1e-15));
    CHECK_THAT(effective_bits(cfg_of(4, 4)), WithinAbs(4.0, 1e-15));
    // Non-power-of-two delay counts land between integer bit widths.
    CHECK_THAT(effective_bits(cfg_of(3, 2)), WithinAbs(2.584962500721156, 1e-12));
    CHECK_THAT(effective_bits(cfg_of(2, 1)), WithinAbs(1.0, 1e-15));
}

TEST_CASE("pulse subdivision refines resolution without moving old phases")
{
    // Every phase reachable with o_tau = 1 stays reachable with o_tau = 2.
    tma_config coarse = cfg_of(4, 1);
    tma_config fine = cfg_of(4, 2);
    for (int d = 0; d < num_delays(coarse); d++)
        CHECK_THAT(delay_phase(fine, 0, 2 * d), WithinAbs(delay_phase(coarse, 0, d), 1e-12));
}

TEST_CASE("delay phase validates its delay argument")
{
    tma_config cfg = cfg_of(4, 2);
    CHECK_THROWS_MATCHES(delay_phase(cfg, 0, 8), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::delay_out_of_range;
                         }));
    CHECK_THROWS_AS(delay_phase(cfg, 0, -1), error);
}
