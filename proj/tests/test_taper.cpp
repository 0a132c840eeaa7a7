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
#include "otma/math_util.hpp"
#include "otma/modseq.hpp"
#include "otma/taper.hpp"

using namespace otma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("duty factor counts the active fraction of a pulse")
{
    CHECK_THAT(duty_factor(4, 0), WithinAbs(1.0, 0.0));
    CHECK_THAT(duty_factor(4, 1), WithinAbs(0.75, 0.0));
    CHECK_THAT(duty_factor(4, 4), WithinAbs(0.0, 0.0));
    CHECK_THAT(duty_factor(2, 1), WithinAbs(0.5, 0.0));
}

TEST_CASE("amplitude levels enumerate the reachable duty factors")
{
    std::vector<double> levels = amplitude_levels(4);
    REQUIRE(levels.size() == 5);
    for (int l = 0; l <= 4; l++)
        CHECK_THAT(levels[static_cast<std::size_t>(l)], WithinAbs(0.25 * l, 1e-15));

    // o_tau pulse subdivisions buy o_tau + 1 amplitude levels.
    CHECK(amplitude_levels(1).size() == 2);
    CHECK(amplitude_levels(8).size() == 9);
}

TEST_CASE("tapered coefficient frozen reference value")
{
    // Half-duty pulse (one of two slots off), main line of a 4-state schedule.
    cdouble c = tapered_coefficient(4, 1, 2, 1);
    CHECK_THAT(std::abs(c), WithinAbs(0.48724767920221634, 1e-15));
    CHECK_THAT(std::arg(c), WithinAbs(-pi / 8, 1e-12));
}

TEST_CASE("taper keeps the comb sparsity")
{
    for (long long k = -20; k <= 20; k++)
    {
        if (mod_floor(k, 4) == 1)
            continue;
        cdouble c = tapered_coefficient(4, k, 3, 1);
        CHECK(c.real() == 0.0);
        CHECK(c.imag() == 0.0);
    }
}

TEST_CASE("zero taper reduces to the plain sequence coefficient")
{
    for (long long k : {-7LL, 1LL, 5LL, 13LL})
    {
        cdouble plain = sequence_coefficient(4, k);
        cdouble tapered = tapered_coefficient(4, k, 4, 0);
        CHECK_THAT(std::abs(tapered - plain), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("full taper silences the schedule")
{
    CHECK_THAT(std::abs(tapered_coefficient(4, 1, 2, 2)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("taper phase offset matches the rotation between the coefficients")
{
    // The offset tracks the complex-exponential part only; the real sinc
    // envelope may flip sign on outer lines. Undoing the predicted rotation
    // must therefore leave the product real, not necessarily positive.
    for (long long k : {1LL, 5LL, -3LL})
        for (int zeros = 0; zeros < 4; zeros++)
        {
            double predicted = taper_phase_offset(4, k, 4, zeros);
            cdouble unrotated = tapered_coefficient(4, k, 4, zeros) *
                                std::conj(sequence_coefficient(4, k)) * cis(-predicted);
            CHECK_THAT(unrotated.imag(), WithinAbs(0.0, 1e-12));
        }
    CHECK_THAT(taper_phase_offset(4, 1, 2, 1), WithinAbs(pi / 8, 1e-15));
    // On the main line nothing flips: the measured argument moves exactly
    // by the predicted offset.
    CHECK_THAT(std::arg(tapered_coefficient(4, 1, 2, 1)) -
                   std::arg(sequence_coefficient(4, 1)),
               WithinAbs(pi / 8, 1e-12));
}

TEST_CASE("worst-case replica gain frozen reference values")
{
    CHECK_THAT(worst_case_harmonic_gain_db(2, 2, 8), WithinAbs(-3.010299956640, 1e-9));
    CHECK_THAT(worst_case_harmonic_gain_db(3, 2, 8), WithinAbs(0.0, 1e-9));
    CHECK_THAT(worst_case_harmonic_gain_db(4, 2, 8), WithinAbs(2.322606875059, 1e-9));
    CHECK_THAT(worst_case_harmonic_gain_db(8, 2, 8), WithinAbs(8.174685575226, 1e-9));
    CHECK_THAT(worst_case_harmonic_gain_db(16, 2, 8), WithinAbs(14.153359532127, 1e-9));
}

TEST_CASE("worst-case replica gain grows with the state count")
{
    double prev = worst_case_harmonic_gain_db(4, 2, 8);
    for (int n = 8; n <= 64; n *= 2)
    {
        double cur = worst_case_harmonic_gain_db(n, 2, 8);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("taper helpers validate their inputs")
{
    CHECK_THROWS_MATCHES(worst_case_harmonic_gain_db(1, 2, 8), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::phase_count_too_small;
                         }));
    CHECK_THROWS_MATCHES(worst_case_harmonic_gain_db(4, 1, 8), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::no_taper_levels;
                         }));
    CHECK_THROWS_MATCHES(worst_case_harmonic_gain_db(4, 2, 0), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::invalid_argument;
                         }));
    CHECK_THROWS_MATCHES(tapered_coefficient(4, 1, 2, 3), error,
                         Catch::Matchers::Predicate<error>([](const error &e) {
                             return e.code() == error_code::taper_out_of_range;
                         }));
    CHECK_THROWS_AS(duty_factor(0, 0), error);
    CHECK_THROWS_AS(duty_factor(2, -1), error);
}
