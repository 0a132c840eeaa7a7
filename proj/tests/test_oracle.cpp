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
#include <complex>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "otma/modseq.hpp"
#include "otma/oracle.hpp"
#include "otma/taper.hpp"

using namespace otma;
using Catch::Matchers::WithinAbs;

namespace
{

tma_config cfg_of(int n, int o_f, int o_tau)
{
    tma_config cfg;
    cfg.n_phases = n;
    cfg.o_f = o_f;
    cfg.o_tau = o_tau;
    cfg.sample_rate = 1e6;
    return cfg;
}

} // namespace

TEST_CASE("sampled schedule repeats each state and zeros open switches")
{
    switch_schedule sched = build_schedule(cfg_of(4, 1, 2), 0, 1);
    sampled_waveform w = sample_schedule(sched, 3);
    REQUIRE(w.size() == 24); // 8 slots x 3 samples
    for (int slot = 0; slot < 8; slot++)
        for (int t = 0; t < 3; t++)
        {
            cdouble v = w.samples[static_cast<std::size_t>(3 * slot + t)];
            if (sched.slots[static_cast<std::size_t>(slot)] == off_slot)
            {
                CHECK(std::abs(v) == 0.0);
            }
            else
            {
                cdouble want = cis(state_phase(4, sched.slots[static_cast<std::size_t>(slot)]));
                CHECK_THAT(std::abs(v - want), WithinAbs(0.0, 1e-15));
            }
        }
    // 3 samples per slot at f_sw = o_f * o_tau * f_s = 2 MHz
    CHECK_THAT(w.rate, WithinAbs(6e6, 1e-3));
}

TEST_CASE("hold-corrected transform recovers the analytic coefficients")
{
    // Cross-check the closed forms against a numeric transform that knows
    // nothing about them: sample, DFT, undo the hold response.
    for (int n : {2, 3, 4, 8})
        for (int o_tau : {1, 2, 4})
            for (int delay : {0, 1})
                for (int zeros = 0; zeros <= (o_tau > 1 ? 1 : 0); zeros++)
                {
                    tma_config cfg = cfg_of(n, 1, o_tau);
                    switch_schedule sched = build_schedule(cfg, delay, zeros);
                    oracle_result oracle = schedule_coefficients(sched, 4);

                    std::vector<std::pair<long long, cdouble>> analytic;
                    for (long long i = -3; i <= 3; i++)
                    {
                        long long k = 1 + i * n;
                        cdouble c = tapered_coefficient(n, k, o_tau, zeros) *
                                    cis(-two_pi * static_cast<double>(k) * delay /
                                        static_cast<double>(sched.period_slots()));
                        analytic.emplace_back(k, c);
                    }
                    double err = compare(analytic, oracle);
                    INFO("n=" << n << " o_tau=" << o_tau << " delay=" << delay
                              << " zeros=" << zeros);
                    CHECK(err < 1e-12);
                }
}

TEST_CASE("hold-corrected coefficients do not depend on sampling density")
{
    switch_schedule sched = build_schedule(cfg_of(8, 1, 2), 3, 1);
    oracle_result coarse = schedule_coefficients(sched, 1);
    oracle_result dense = schedule_coefficients(sched, 7);
    for (long long k = -30; k <= 30; k++)
        CHECK_THAT(std::abs(coarse.coefficient(k) - dense.coefficient(k)),
                   WithinAbs(0.0, 1e-12));
}

TEST_CASE("plain transform converges to the analytic value as density grows")
{
    tma_config cfg = cfg_of(4, 1, 1);
    switch_schedule sched = build_schedule(cfg);
    cdouble analytic = sequence_coefficient(4, 1);

    double err_prev = 0.0;
    bool first = true;
    for (int density : {8, 16, 32, 64})
    {
        oracle_result plain = schedule_coefficients(sched, density, false);
        double err = std::abs(plain.coefficient(1) - analytic);
        if (!first)
            CHECK(err < 0.6 * err_prev);
        err_prev = err;
        first = false;
    }
    // first-order residual |C| * pi / L at L = 256
    CHECK(err_prev < 2e-2);
}

TEST_CASE("correction extends the line estimate beyond the sampled window")
{
    // The corrected coefficient is exact for every integer line, including
    // lines past the DFT length, where the plain bins just alias.
    switch_schedule sched = build_schedule(cfg_of(4, 1, 1));
    oracle_result oracle = schedule_coefficients(sched, 3); // L = 12
    for (long long m : {0LL, 1LL, 3LL, 5LL})
    {
        long long k = 1 + 4 * m; // 1, 5, 13, 21 — the last two exceed L
        CHECK_THAT(std::abs(oracle.coefficient(k) - sequence_coefficient(4, k)),
                   WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("off-comb lines vanish in the numeric transform too")
{
    switch_schedule sched = build_schedule(cfg_of(4, 1, 1));
    oracle_result oracle = schedule_coefficients(sched, 4);
    for (long long k = -8; k <= 8; k++)
    {
        if (mod_floor(k, 4) == 1)
            continue;
        CHECK_THAT(std::abs(oracle.coefficient(k)), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("compare reports the largest deviation in the set")
{
    switch_schedule sched = build_schedule(cfg_of(4, 1, 1));
    oracle_result oracle = schedule_coefficients(sched, 2);
    std::vector<std::pair<long long, cdouble>> probes = {
        {1, oracle.coefficient(1)},
        {5, oracle.coefficient(5) + cdouble{3e-4, 0.0}},
    };
    double err = compare(probes, oracle);
    CHECK_THAT(err, WithinAbs(3e-4, 1e-12));
}
