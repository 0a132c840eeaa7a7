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

#include "otma/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "otma/delayctl.hpp"
#include "otma/math_util.hpp"
#include "otma/modseq.hpp"
#include "otma/modulator.hpp"
#include "otma/oracle.hpp"
#include "otma/taper.hpp"

namespace otma
{

namespace
{

struct worst_tracker
{
    double value = 0.0;
    std::string where;

    void update(double v, const std::string &w)
    {
        if (v > value)
        {
            value = v;
            where = w;
        }
    }
};

std::string grid_tag(int n, int o_tau, int d, int l)
{
    return "N=" + std::to_string(n) + " o_tau=" + std::to_string(o_tau) +
           " d=" + std::to_string(d) + " l=" + std::to_string(l);
}

// Closed-form coefficient of the delayed, tapered schedule at line k.
cdouble analytic_line(const tma_config &cfg, int d, int l, long long k)
{
    cdouble base = tapered_coefficient(cfg.n_phases, k, cfg.o_tau, l);
    double shift = -two_pi * static_cast<double>(k) * static_cast<double>(d) /
                   static_cast<double>(cfg.period_slots());
    return base * cis(shift);
}

} // namespace

verify_report run_verification(const verify_options &opt)
{
    verify_report report;

    // --- closed forms vs time-domain oracle over the full grid ---------------
    {
        worst_tracker w;
        for (int n : opt.n_phases_grid)
            for (int o_tau : opt.o_tau_grid)
            {
                tma_config cfg{n, 1, o_tau, 1.0};
                const long long lines =
                    static_cast<long long>(cfg.period_slots()) * opt.samples_per_slot;
                for (int d = 0; d < cfg.period_slots(); d++)
                    for (int l = 0; l <= o_tau; l++)
                    {
                        oracle_result oracle =
                            schedule_coefficients(build_schedule(cfg, d, l), opt.samples_per_slot);
                        std::vector<std::pair<long long, cdouble>> analytic;
                        analytic.reserve(static_cast<std::size_t>(lines));
                        for (long long k = -(lines / 2); k < lines - lines / 2; k++)
                        {
                            cdouble v = analytic_line(cfg, d, l, k);
                            if (opt.inject_fault && k == 1 && d == 0 && l == 0 && n == 4 &&
                                o_tau == 1)
                                v += 1e-6;
                            analytic.push_back({k, v});
                        }
                        w.update(compare(analytic, oracle), grid_tag(n, o_tau, d, l));
                    }
            }
        report.checks.push_back({"closed-form vs oracle coefficients", w.value, 1e-9,
                                 w.value < 1e-9, "worst at " + w.where});
    }

    // --- hold-corrected oracle is sampling-density independent ---------------
    {
        worst_tracker w;
        for (int n : opt.n_phases_grid)
            for (int o_tau : opt.o_tau_grid)
            {
                tma_config cfg{n, 1, o_tau, 1.0};
                switch_schedule sched = build_schedule(cfg, 1 % cfg.period_slots(), 0);
                oracle_result coarse = schedule_coefficients(sched, 1);
                oracle_result dense = schedule_coefficients(sched, 8);
                for (long long k = -2 * cfg.period_slots(); k <= 2 * cfg.period_slots(); k++)
                    w.update(std::abs(coarse.coefficient(k) - dense.coefficient(k)),
                             grid_tag(n, o_tau, 1 % cfg.period_slots(), 0) +
                                 " k=" + std::to_string(k));
            }
        report.checks.push_back({"hold-corrected oracle independent of sampling density", w.value,
                                 1e-12, w.value < 1e-12, "worst at " + w.where});
    }

    // --- plain DFT converges to the corrected one as density grows -----------
    {
        worst_tracker w_abs;
        worst_tracker w_ratio;
        for (int n : opt.n_phases_grid)
        {
            tma_config cfg{n, 1, 2, 1.0};
            switch_schedule sched = build_schedule(cfg, 0, 0);
            oracle_result exact = schedule_coefficients(sched, 1);
            oracle_result coarse = schedule_coefficients(sched, 16, /*zoh_correction=*/false);
            oracle_result dense = schedule_coefficients(sched, 64, /*zoh_correction=*/false);
            double err_coarse = 0.0, err_dense = 0.0;
            for (long long k = 0; k < cfg.period_slots(); k++)
            {
                err_coarse = std::max(err_coarse,
                                      std::abs(exact.coefficient(k) - coarse.coefficient(k)));
                err_dense = std::max(err_dense,
                                     std::abs(exact.coefficient(k) - dense.coefficient(k)));
            }
            w_abs.update(err_dense, "N=" + std::to_string(n));
            if (err_coarse > 0.0)
                w_ratio.update(err_dense / err_coarse, "N=" + std::to_string(n));
        }
        report.checks.push_back({"plain DFT error small at dense sampling", w_abs.value, 1e-2,
                                 w_abs.value < 1e-2, "K=64, worst at " + w_abs.where});
        report.checks.push_back({"plain DFT error shrinks with sampling density", w_ratio.value,
                                 0.6, w_ratio.value < 0.6,
                                 "K=64 vs K=16 error ratio, worst at " + w_ratio.where});
    }

    // --- sparsity of untapered schedules -------------------------------------
    {
        worst_tracker w;
        for (int n : opt.n_phases_grid)
            for (int o_tau : opt.o_tau_grid)
            {
                tma_config cfg{n, 1, o_tau, 1.0};
                for (int d = 0; d < cfg.period_slots(); d++)
                {
                    oracle_result oracle =
                        schedule_coefficients(build_schedule(cfg, d, 0), opt.samples_per_slot);
                    const long long lines = static_cast<long long>(oracle.size());
                    for (long long k = 0; k < lines; k++)
                        if (mod_floor(k, n) != 1)
                            w.update(std::abs(oracle.coefficient(k)), grid_tag(n, o_tau, d, 0) +
                                                                          " k=" + std::to_string(k));
                }
            }
        report.checks.push_back({"off-pattern spectral lines vanish", w.value, 1e-12,
                                 w.value < 1e-12, "worst at " + w.where});
    }

    // --- Parseval: line power equals time-domain mean power ------------------
    {
        worst_tracker w_exact;
        worst_tracker w_series;
        for (int n : opt.n_phases_grid)
            for (int o_tau : opt.o_tau_grid)
                for (int l = 0; l <= o_tau; l++)
                {
                    tma_config cfg{n, 1, o_tau, 1.0};
                    switch_schedule sched = build_schedule(cfg, 0, l);
                    sampled_waveform wave = sample_schedule(sched, opt.samples_per_slot);
                    double mean_power = wave.mean_power();

                    // Complete discrete spectrum: identity is exact.
                    oracle_result oracle = dft_coefficients(wave, /*zoh_correction=*/false);
                    double line_power = 0.0;
                    for (const cdouble &b : oracle.bins)
                        line_power += std::norm(b);
                    w_exact.update(std::abs(line_power - mean_power), grid_tag(n, o_tau, 0, l));

                    // Truncated closed-form series: converges like 1/i_max.
                    double duty = duty_factor(o_tau, l);
                    double series = 0.0;
                    for (long long i = -opt.parseval_i_max; i <= opt.parseval_i_max; i++)
                        series += std::norm(
                            tapered_coefficient(n, 1 + i * n, o_tau, l));
                    w_series.update(std::abs(series - duty), grid_tag(n, o_tau, 0, l));
                }
        report.checks.push_back({"Parseval power identity (complete spectrum)", w_exact.value,
                                 1e-12, w_exact.value < 1e-12, "worst at " + w_exact.where});
        report.checks.push_back({"Parseval power identity (truncated series)", w_series.value,
                                 1e-3, w_series.value < 1e-3,
                                 "i_max=" + std::to_string(opt.parseval_i_max) + ", worst at " +
                                     w_series.where});
    }

    // --- delay phases: D distinct values, uniformly spaced -------------------
    {
        worst_tracker w;
        for (int n : opt.n_phases_grid)
            for (int o_tau : opt.o_tau_grid)
            {
                tma_config cfg{n, 1, o_tau, 1.0};
                const int d_count = num_delays(cfg);
                std::vector<double> phases;
                for (int d = 0; d < d_count; d++)
                    phases.push_back(delay_phase(cfg, 0, d));
                std::sort(phases.begin(), phases.end());
                double spacing = two_pi / static_cast<double>(d_count);
                for (int d = 0; d < d_count; d++)
                {
                    double expect = phases.front() + spacing * static_cast<double>(d);
                    w.update(std::abs(phases[static_cast<std::size_t>(d)] - expect),
                             "N=" + std::to_string(n) + " o_tau=" + std::to_string(o_tau) +
                                 " slot " + std::to_string(d));
                }
            }
        report.checks.push_back({"main-replica delay phases uniform on the circle", w.value, 1e-12,
                                 w.value < 1e-12, "worst at " + w.where});
    }

    // --- modulated signal reconstructed from its replica set -----------------
    {
        worst_tracker w_res;
        worst_tracker w_trunc;
        for (int o_f : {1, 2})
            for (int o_tau : {1, 2})
                for (int l = 0; l <= (o_tau > 1 ? 1 : 0); l++)
                {
                    tma_config cfg{4, o_f, o_tau, 1.0};
                    int d = 1 % cfg.period_slots();
                    sampled_waveform s =
                        make_test_baseband(cfg, 16, 20260822u, opt.samples_per_slot + 1);
                    sampled_waveform y = modulate(s, cfg, d, l);
                    replica_spectrum rep =
                        sampled_replicas(cfg, d, l, opt.samples_per_slot + 1);
                    std::string tag = "N=4 o_f=" + std::to_string(o_f) +
                                      " o_tau=" + std::to_string(o_tau) +
                                      " d=" + std::to_string(d) + " l=" + std::to_string(l);
                    w_trunc.update(truncated_power_fraction(cfg, d, l, opt.samples_per_slot + 1,
                                                            rep),
                                   tag);
                    w_res.update(verify_replicas(y, rep, s), tag);
                }
        report.checks.push_back({"replica truncation power fraction", w_trunc.value, 1e-14,
                                 w_trunc.value < 1e-14, "worst at " + w_trunc.where});
        report.checks.push_back({"replica-sum spectrum reconstruction", w_res.value, 1e-6,
                                 w_res.value < 1e-6, "worst at " + w_res.where});
    }

    return report;
}

} // namespace otma
