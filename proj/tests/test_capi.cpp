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
//
// Exercises the shared-library surface exactly as an external consumer
// would: opaque handles, status codes, no C++ types.

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "otma.h"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::string temp_path(const char *name)
{
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("version string is exposed")
{
    REQUIRE(otma_version() != nullptr);
    CHECK(std::strlen(otma_version()) >= 5);
}

TEST_CASE("config lifecycle and derived getters")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 2, 3, 1e6, &cfg) == OTMA_OK);
    REQUIRE(cfg != nullptr);

    int n = 0;
    CHECK(otma_tma_config_get_n_phases(cfg, &n) == OTMA_OK);
    CHECK(n == 4);
    int o = 0;
    CHECK(otma_tma_config_get_oversampling(cfg, &o) == OTMA_OK);
    CHECK(o == 6);
    double rate = 0.0;
    CHECK(otma_tma_config_get_switch_rate(cfg, &rate) == OTMA_OK);
    CHECK_THAT(rate, WithinRel(6e6, 1e-12));
    CHECK(otma_tma_config_get_mod_rate(cfg, &rate) == OTMA_OK);
    CHECK_THAT(rate, WithinRel(5e5, 1e-12));

    otma_tma_config_free(cfg);
}

TEST_CASE("invalid config reports a status and a message")
{
    otma_tma_config *cfg = nullptr;
    otma_status st = otma_tma_config_create(1, 1, 1, 1e6, &cfg);
    CHECK(st == OTMA_ERROR_PHASE_COUNT_TOO_SMALL);
    CHECK(cfg == nullptr);
    CHECK(std::strlen(otma_last_error()) > 0);

    CHECK(otma_tma_config_create(4, 0, 1, 1e6, &cfg) == OTMA_ERROR_NON_POSITIVE_PARAMETER);
    CHECK(otma_tma_config_create(4, 1, 1, -1.0, &cfg) == OTMA_ERROR_NON_POSITIVE_PARAMETER);
}

TEST_CASE("null arguments are rejected, not dereferenced")
{
    CHECK(otma_tma_config_create(4, 1, 1, 1e6, nullptr) == OTMA_ERROR_INVALID_ARGUMENT);
    int out = 0;
    CHECK(otma_tma_config_get_n_phases(nullptr, &out) == OTMA_ERROR_INVALID_ARGUMENT);
    double d = 0.0;
    CHECK(otma_harmonic_power_db(4, 0, nullptr) == OTMA_ERROR_INVALID_ARGUMENT);
    CHECK(otma_state_phase(4, 1, &d) == OTMA_OK);
}

TEST_CASE("JSON config parsing through the C surface")
{
    otma_tma_config *tma = nullptr;
    otma_array_config *arr = nullptr;
    const char *text = R"({"n_phases": 8, "o_tau": 2, "array": {"n_antennas": 16}})";
    REQUIRE(otma_config_from_json(text, &tma, &arr) == OTMA_OK);
    REQUIRE(tma != nullptr);
    REQUIRE(arr != nullptr);
    int n = 0;
    CHECK(otma_tma_config_get_n_phases(tma, &n) == OTMA_OK);
    CHECK(n == 8);
    int m = 0;
    CHECK(otma_array_config_get_n_antennas(arr, &m) == OTMA_OK);
    CHECK(m == 16);
    otma_tma_config_free(tma);
    otma_array_config_free(arr);

    tma = nullptr;
    arr = nullptr;
    CHECK(otma_config_from_json("{\"bogus\": 1}", &tma, &arr) == OTMA_ERROR_JSON);
    CHECK(tma == nullptr);

    CHECK(otma_config_from_file("/nonexistent/otma.json", &tma, &arr) == OTMA_ERROR_IO);
}

TEST_CASE("schedule handles carry slots and serialize to CSV")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 1, 2, 1e6, &cfg) == OTMA_OK);
    otma_schedule *sched = nullptr;
    REQUIRE(otma_schedule_build(cfg, 2, 1, &sched) == OTMA_OK);

    int period = 0;
    CHECK(otma_schedule_period_slots(sched, &period) == OTMA_OK);
    CHECK(period == 8);
    int state = 0;
    CHECK(otma_schedule_slot_state(sched, 2, &state) == OTMA_OK);
    CHECK(state == 0); // delay 2 moved pulse 0 here
    CHECK(otma_schedule_slot_state(sched, 3, &state) == OTMA_OK);
    CHECK(state == -1); // tapered tail slot is off
    CHECK(otma_schedule_slot_state(sched, 99, &state) == OTMA_ERROR_INDEX_OUT_OF_RANGE);

    std::string path = temp_path("otma_capi_schedule.csv");
    CHECK(otma_schedule_write_csv(sched, path.c_str(), 2) == OTMA_OK);
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);

    CHECK(otma_schedule_write_csv(sched, "/nonexistent/dir/x.csv", 1) == OTMA_ERROR_IO);

    otma_schedule_free(sched);
    otma_tma_config_free(cfg);
}

TEST_CASE("coefficient functions match across the boundary")
{
    double re = 0.0, im = 0.0;
    REQUIRE(otma_harmonic_coefficient(4, 0, &re, &im) == OTMA_OK);
    CHECK_THAT(re, WithinAbs(0.6366197723675814, 1e-15));
    CHECK_THAT(im, WithinAbs(-0.6366197723675813, 1e-15));

    double db = 0.0;
    REQUIRE(otma_harmonic_power_db(4, -1, &db) == OTMA_OK);
    CHECK_THAT(db, WithinAbs(-10.4545226784, 1e-8));

    REQUIRE(otma_sequence_coefficient(4, 2, &re, &im) == OTMA_OK);
    CHECK(re == 0.0);
    CHECK(im == 0.0);

    REQUIRE(otma_tapered_coefficient(4, 1, 2, 1, &re, &im) == OTMA_OK);
    CHECK_THAT(std::hypot(re, im), WithinAbs(0.48724767920221634, 1e-15));
}

TEST_CASE("spectrum handle enumerates replica lines")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 2, 1, 1e6, &cfg) == OTMA_OK);
    otma_spectrum *spec = nullptr;
    REQUIRE(otma_spectrum_compute(cfg, 2, &spec) == OTMA_OK);
    int count = 0;
    CHECK(otma_spectrum_size(spec, &count) == OTMA_OK);
    CHECK(count == 5);
    long long harmonic = 0;
    double freq = 0.0, re = 0.0, im = 0.0;
    CHECK(otma_spectrum_entry(spec, 2, &harmonic, &freq, &re, &im) == OTMA_OK);
    CHECK(harmonic == 0);
    CHECK_THAT(freq, WithinRel(5e5, 1e-12));
    CHECK(otma_spectrum_entry(spec, 5, &harmonic, &freq, &re, &im) ==
          OTMA_ERROR_INDEX_OUT_OF_RANGE);
    otma_spectrum_free(spec);
    otma_tma_config_free(cfg);
}

TEST_CASE("delay control through the C surface")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 1, 4, 1e6, &cfg) == OTMA_OK);
    int d_count = 0;
    CHECK(otma_num_delays(cfg, &d_count) == OTMA_OK);
    CHECK(d_count == 16);
    double bits = 0.0;
    CHECK(otma_effective_bits(cfg, &bits) == OTMA_OK);
    CHECK_THAT(bits, WithinAbs(4.0, 1e-12));
    double phase = 0.0;
    CHECK(otma_delay_phase(cfg, 0, 16, &phase) == OTMA_ERROR_DELAY_OUT_OF_RANGE);
    otma_tma_config_free(cfg);
}

TEST_CASE("amplitude level query follows the count-then-fill convention")
{
    int count = 0;
    REQUIRE(otma_amplitude_levels(4, nullptr, &count) == OTMA_OK);
    REQUIRE(count == 5);
    double levels[5];
    REQUIRE(otma_amplitude_levels(4, levels, &count) == OTMA_OK);
    CHECK_THAT(levels[0], WithinAbs(0.0, 0.0));
    CHECK_THAT(levels[4], WithinAbs(1.0, 0.0));
    CHECK_THAT(levels[2], WithinAbs(0.5, 1e-15));
}

TEST_CASE("waveform pipeline through the C surface")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 1, 1, 1e6, &cfg) == OTMA_OK);
    otma_waveform *s = nullptr;
    REQUIRE(otma_waveform_make_test(cfg, 8, 7u, 4, &s) == OTMA_OK);
    int64_t n = 0;
    CHECK(otma_waveform_size(s, &n) == OTMA_OK);
    CHECK(n == 32);
    double p = 0.0;
    CHECK(otma_waveform_mean_power(s, &p) == OTMA_OK);
    CHECK_THAT(p, WithinAbs(1.0, 1e-12));

    otma_waveform *y = nullptr;
    REQUIRE(otma_waveform_modulate(s, cfg, 1, 0, &y) == OTMA_OK);
    double re = 0.0, im = 0.0;
    CHECK(otma_waveform_sample(y, 0, &re, &im) == OTMA_OK);
    CHECK(otma_waveform_sample(y, n, &re, &im) == OTMA_ERROR_INDEX_OUT_OF_RANGE);

    otma_replicas *rep = nullptr;
    REQUIRE(otma_replicas_sampled(cfg, 1, 0, 4, &rep) == OTMA_OK);
    double residual = 0.0;
    CHECK(otma_verify_replicas(y, rep, s, &residual) == OTMA_OK);
    CHECK(residual < 1e-6);

    double frac = 0.0;
    CHECK(otma_replicas_truncated_power(cfg, 1, 0, 4, rep, &frac) == OTMA_OK);
    CHECK(frac < 1e-14);

    std::string path = temp_path("otma_capi_replicas.json");
    CHECK(otma_replicas_write_json(rep, path.c_str()) == OTMA_OK);
    std::filesystem::remove(path);

    otma_replicas_free(rep);
    otma_waveform_free(y);
    otma_waveform_free(s);
    otma_tma_config_free(cfg);
}

TEST_CASE("beam pattern sweep through the C surface")
{
    otma_tma_config *cfg = nullptr;
    REQUIRE(otma_tma_config_create(4, 1, 2, 1e6, &cfg) == OTMA_OK);
    otma_array_config *acfg = nullptr;
    REQUIRE(otma_array_config_create(8, 0.5, 1e9, &acfg) == OTMA_OK);

    long long harmonics[2] = {0, -1};
    otma_beampattern *bp = nullptr;
    REQUIRE(otma_beampattern_sweep(acfg, cfg, 2, harmonics, 2, 1.0, nullptr, nullptr, 0,
                                   &bp) == OTMA_OK);
    int n_angles = 0;
    CHECK(otma_beampattern_n_angles(bp, &n_angles) == OTMA_OK);
    CHECK(n_angles == 181);
    int n_rows = 0;
    CHECK(otma_beampattern_n_harmonics(bp, &n_rows) == OTMA_OK);
    CHECK(n_rows == 2);
    long long h = 99;
    CHECK(otma_beampattern_harmonic(bp, 1, &h) == OTMA_OK);
    CHECK(h == -1);

    int exists = 0;
    double direction = 0.0;
    CHECK(otma_beam_direction(cfg, acfg, 0, 2, &exists, &direction) == OTMA_OK);
    CHECK(exists == 1);
    CHECK_THAT(direction, WithinAbs(-30.0, 1e-9));
    CHECK(otma_beam_direction(cfg, acfg, 0, 5, &exists, &direction) == OTMA_OK);
    CHECK(exists == 0);

    // peak of the i=0 row sits at the steering angle
    double best_mag = -1.0, best_angle = 0.0;
    for (int g = 0; g < n_angles; g++)
    {
        double angle = 0.0, re = 0.0, im = 0.0;
        REQUIRE(otma_beampattern_angle(bp, g, &angle) == OTMA_OK);
        REQUIRE(otma_beampattern_value(bp, 0, g, &re, &im) == OTMA_OK);
        double mag = std::hypot(re, im);
        if (mag > best_mag)
        {
            best_mag = mag;
            best_angle = angle;
        }
    }
    CHECK_THAT(best_angle, WithinAbs(-30.0, 1.0 + 1e-9));

    std::string path = temp_path("otma_capi_beampattern.csv");
    const otma_beampattern *patterns[1] = {bp};
    CHECK(otma_beampattern_write_csv(patterns, 1, "{\"note\":\"api test\"}", path.c_str()) ==
          OTMA_OK);
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);

    otma_beampattern_free(bp);
    otma_array_config_free(acfg);
    otma_tma_config_free(cfg);
}

TEST_CASE("verification grid through the C surface")
{
    otma_verify_report *report = nullptr;
    REQUIRE(otma_verify_run(2, 0, &report) == OTMA_OK);
    int count = 0;
    CHECK(otma_verify_report_size(report, &count) == OTMA_OK);
    CHECK(count >= 8);
    int passed = 0;
    CHECK(otma_verify_report_passed(report, &passed) == OTMA_OK);
    CHECK(passed == 1);
    const char *name = nullptr;
    const char *detail = nullptr;
    double max_error = 0.0, threshold = 0.0;
    int check_passed = 0;
    REQUIRE(otma_verify_report_check(report, 0, &name, &max_error, &threshold, &check_passed,
                                     &detail) == OTMA_OK);
    CHECK(name != nullptr);
    CHECK(threshold > 0.0);
    otma_verify_report_free(report);

    // fault injection must flip the overall verdict
    REQUIRE(otma_verify_run(2, 1, &report) == OTMA_OK);
    CHECK(otma_verify_report_passed(report, &passed) == OTMA_OK);
    CHECK(passed == 0);
    otma_verify_report_free(report);
}
