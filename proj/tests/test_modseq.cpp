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

#include <catch2/catch_amalgamated.hpp>

#include "otma/errors.hpp"
#include "otma/modseq.hpp"

using namespace otma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

tma_config cfg_of(int n, int o_f, int o_tau, double fs = 1e6)
{
    tma_config cfg;
    cfg.n_phases = n;
    cfg.o_f = o_f;
    cfg.o_tau = o_tau;
    cfg.sample_rate = fs;
    return cfg;
}

} // namespace

TEST_CASE("schedule walks the phase states in pulse-sized blocks")
{
    switch_schedule sched = build_schedule(cfg_of(4, 1, 3));
    REQUIRE(sched.period_slots() == 12);
    for (int r = 0; r < 12; r++)
        CHECK(sched.slots[r] == r / 3);
    CHECK(sched.n_phases == 4);
    CHECK_THAT(sched.slot_duration, WithinRel(1.0 / 3e6, 1e-15));
}

TEST_CASE("cyclic delay rotates the schedule without reordering it")
{
    switch_schedule base = build_schedule(cfg_of(4, 2, 2));
    switch_schedule shifted = build_schedule(cfg_of(4, 2, 2), 3);
    int period = base.period_slots();
    for (int r = 0; r < period; r++)
        CHECK(shifted.slots[(r + 3) % period] == base.slots[r]);
}

TEST_CASE("taper zeros switch off the tail of every pulse")
{
    switch_schedule sched = build_schedule(cfg_of(4, 1, 3), 0, 2);
    // Each 3-slot pulse keeps one active slot, then two open-switch slots.
    for (int p = 0; p < 4; p++)
    {
        CHECK(sched.slots[3 * p] == p);
        CHECK(sched.slots[3 * p + 1] == off_slot);
        CHECK(sched.slots[3 * p + 2] == off_slot);
    }
}

TEST_CASE("schedule construction validates taper range")
{
    CHECK_THROWS_MATCHES(build_schedule(cfg_of(4, 1, 2), 0, 3), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::taper_out_of_range;
                         }));
    CHECK_THROWS_AS(build_schedule(cfg_of(4, 1, 2), 0, -1), error);
    CHECK_THROWS_MATCHES(build_schedule(cfg_of(4, 1, 2), 8, 0), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::delay_out_of_range;
                         }));
}

TEST_CASE("state phases are uniform on the circle")
{
    CHECK_THAT(state_phase(4, 0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(state_phase(4, 1), WithinRel(pi / 2, 1e-15));
    CHECK_THAT(state_phase(4, 3), WithinRel(3 * pi / 2, 1e-15));
    CHECK_THAT(state_phase(8, 5), WithinRel(5 * pi / 4, 1e-15));
}

TEST_CASE("pulse coefficient reduces to the bare state phasor at DC")
{
    for (int state = 0; state < 4; state++)
    {
        cdouble c = pulse_coefficient(4, state, 0);
        cdouble want = cis(state_phase(4, state));
        CHECK_THAT(std::abs(c - want), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("sequence coefficient is exactly zero off the replica lines")
{
    for (long long k = -40; k <= 40; k++)
    {
        if (((k % 4) + 4) % 4 == 1)
            continue;
        cdouble c = sequence_coefficient(4, k);
        CHECK(c.real() == 0.0);
        CHECK(c.imag() == 0.0);
    }
}

TEST_CASE("sequence coefficient frozen reference values")
{
    // Two-state schedule, main line: purely imaginary with magnitude 2/pi.
    cdouble c21 = sequence_coefficient(2, 1);
    CHECK_THAT(c21.real(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(c21.imag(), WithinAbs(-0.6366197723675814, 1e-15));

    // Four-state schedule, line k = -3 (first replica below the carrier).
    CHECK_THAT(std::abs(sequence_coefficient(4, -3)),
               WithinAbs(0.3001054387190354, 1e-15));
}

TEST_CASE("main-replica coefficient frozen reference values")
{
    cdouble a = harmonic_coefficient(4, 0);
    CHECK_THAT(a.real(), WithinAbs(0.6366197723675814, 1e-15));
    CHECK_THAT(a.imag(), WithinAbs(-0.6366197723675813, 1e-15));
    CHECK_THAT(std::abs(a), WithinAbs(0.9003163161571061, 1e-15));

    // harmonic_coefficient is sequence_coefficient on the k = 1 + i*N comb.
    for (long long i = -5; i <= 5; i++)
    {
        cdouble lhs = harmonic_coefficient(4, i);
        cdouble rhs = sequence_coefficient(4, 1 + 4 * i);
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 0.0));
    }
}

TEST_CASE("replica powers frozen reference values")
{
    CHECK_THAT(harmonic_power_db(2, 0), WithinAbs(-3.922397540603, 1e-9));
    CHECK_THAT(harmonic_power_db(2, -1), WithinAbs(-3.922397540603, 1e-9));
    CHECK_THAT(harmonic_power_db(4, 0), WithinAbs(-0.912097583963, 1e-9));
    CHECK_THAT(harmonic_power_db(4, -1), WithinAbs(-10.454522678356, 1e-9));
    CHECK_THAT(harmonic_power_db(8, 0), WithinAbs(-0.224404502382, 1e-9));
    CHECK_THAT(harmonic_power_db(8, -1), WithinAbs(-17.126365302667, 1e-9));
    CHECK_THAT(harmonic_power_db(16, 0), WithinAbs(-0.055883289270, 1e-9));
}

TEST_CASE("main-replica power grows monotonically with the state count")
{
    double prev = harmonic_power_db(2, 0);
    for (int n = 3; n <= 64; n++)
    {
        double cur = harmonic_power_db(n, 0);
        CHECK(cur > prev);
        prev = cur;
    }
    // and approaches the unmodulated limit of 0 dB
    CHECK(harmonic_power_db(64, 0) > -0.004);
}

TEST_CASE("replica power sums to unity over the full series")
{
    double sum = 0.0;
    for (long long i = -1000; i <= 1000; i++)
        sum += std::norm(harmonic_coefficient(4, i));
    CHECK_THAT(sum, WithinAbs(0.9998987, 1e-5));
    CHECK(sum < 1.0);
}

TEST_CASE("analytic spectrum lists replica lines at the right frequencies")
{
    tma_config cfg = cfg_of(4, 2, 1);
    harmonic_spectrum spec = spectrum(cfg, 3);
    REQUIRE(spec.entries.size() == 7);
    CHECK(spec.i_max == 3);
    // f_mod = f_p / N = 2 MHz / 4, replicas spaced by f_p = 2 MHz.
    for (int idx = 0; idx < 7; idx++)
    {
        const harmonic_entry &e = spec.entries[idx];
        CHECK(e.harmonic == idx - 3);
        CHECK_THAT(e.freq_hz, WithinRel(0.5e6 + (idx - 3) * 2e6, 1e-12));
        CHECK_THAT(std::abs(e.coeff - harmonic_coefficient(4, e.harmonic)),
                   WithinAbs(0.0, 0.0));
    }
}

TEST_CASE("coefficient helpers reject a non-positive state count")
{
    CHECK_THROWS_MATCHES(sequence_coefficient(0, 1), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::non_positive_parameter;
                         }));
    CHECK_THROWS_AS(harmonic_power_db(0, 0), error);
    CHECK_THROWS_AS(state_phase(4, 4), error);
}

TEST_CASE("degenerate single-state schedule keeps all power in the carrier")
{
    // N = 1 never switches; every line except DC vanishes and DC is unity.
    CHECK_THAT(std::abs(sequence_coefficient(1, 0) - cdouble{1.0, 0.0}),
               WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(sequence_coefficient(1, 3)), WithinAbs(0.0, 1e-15));
}
