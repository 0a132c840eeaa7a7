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

#include "otma/beamformer.hpp"

#include <cmath>
#include <string>

#include "otma/errors.hpp"
#include "otma/modseq.hpp"
#include "otma/taper.hpp"

namespace otma
{

static void check_delay(const tma_config &cfg, int delay, const char *who)
{
    if (delay < 0 || delay >= cfg.period_slots())
        throw_error(error_code::delay_out_of_range,
                    std::string(who) + ": delay " + std::to_string(delay) + " outside [0, " +
                        std::to_string(cfg.period_slots()) + ")");
}

double antenna_phase(const tma_config &cfg, int antenna, long long harmonic, int delay)
{
    validate(cfg);
    if (antenna < 0)
        throw_error(error_code::index_out_of_range, "antenna_phase: antenna index must be >= 0");
    check_delay(cfg, delay, "antenna_phase");
    double slope = 1.0 / static_cast<double>(cfg.period_slots()) +
                   static_cast<double>(harmonic) / static_cast<double>(cfg.o_tau);
    return wrap_phase(-two_pi * static_cast<double>(antenna) * static_cast<double>(delay) * slope);
}

// Frequency offset of replica i from the carrier: (1/N + i) * f_p.
static double harmonic_offset(const tma_config &cfg, long long harmonic)
{
    return (1.0 / static_cast<double>(cfg.n_phases) + static_cast<double>(harmonic)) *
           cfg.pulse_rate();
}

cdouble array_factor(const array_config &acfg, const tma_config &cfg, double theta_deg,
                     long long harmonic, int delay, af_mode mode)
{
    validate(cfg);
    validate(acfg);
    check_delay(cfg, delay, "array_factor");

    // Propagation phase per element index: the exact mode evaluates the
    // geometric delay at the replica's own frequency instead of the carrier.
    double freq_scale = 1.0;
    if (mode == af_mode::exact)
        freq_scale = 1.0 + harmonic_offset(cfg, harmonic) / acfg.carrier_freq;

    const double line = 1.0 + static_cast<double>(cfg.n_phases) * static_cast<double>(harmonic);
    const double sin_t = std::sin(deg2rad(theta_deg));
    const double d_count = static_cast<double>(cfg.period_slots());

    cdouble acc = 0.0;
    for (int m = 0; m < acfg.n_antennas; m++)
    {
        double u = static_cast<double>(delay) * line / d_count +
                   acfg.spacing_wl * sin_t * freq_scale;
        acc += cis(-two_pi * static_cast<double>(m) * u);
    }
    return harmonic_coefficient(cfg.n_phases, harmonic) * acc /
           std::sqrt(static_cast<double>(acfg.n_antennas));
}

std::optional<double> beam_direction(const tma_config &cfg, const array_config &acfg,
                                     long long harmonic, int delay)
{
    validate(cfg);
    validate(acfg);
    check_delay(cfg, delay, "beam_direction");
    double arg = static_cast<double>(delay) *
                 (1.0 + static_cast<double>(cfg.n_phases) * static_cast<double>(harmonic)) /
                 (static_cast<double>(cfg.period_slots()) * acfg.spacing_wl);
    if (arg < -1.0 || arg > 1.0)
        return std::nullopt;
    return rad2deg(-std::asin(arg));
}

beam_pattern beampattern_sweep(const array_config &acfg, const tma_config &cfg, int delay,
                               const std::vector<long long> &harmonics, double grid_step_deg,
                               const std::vector<int> &taper_zeros,
                               const std::vector<int> &delay_override, af_mode mode)
{
    validate(cfg);
    validate(acfg);
    check_delay(cfg, delay, "beampattern_sweep");
    if (!(grid_step_deg > 0.0))
        throw_error(error_code::invalid_grid, "beampattern_sweep: grid_step must be > 0");
    const int m_count = acfg.n_antennas;
    const int d_count = cfg.period_slots();
    if (!taper_zeros.empty() && static_cast<int>(taper_zeros.size()) != m_count)
        throw_error(error_code::taper_out_of_range,
                    "beampattern_sweep: need one taper level per antenna");
    for (int l : taper_zeros)
        if (l < 0 || l > cfg.o_tau)
            throw_error(error_code::taper_out_of_range,
                        "beampattern_sweep: taper level " + std::to_string(l) + " outside [0, " +
                            std::to_string(cfg.o_tau) + "]");
    if (!delay_override.empty() && static_cast<int>(delay_override.size()) != m_count)
        throw_error(error_code::delay_out_of_range,
                    "beampattern_sweep: need one delay per antenna");
    for (int d : delay_override)
        if (d < 0 || d >= d_count)
            throw_error(error_code::delay_out_of_range,
                        "beampattern_sweep: delay " + std::to_string(d) + " outside [0, " +
                            std::to_string(d_count) + ")");

    beam_pattern bp;
    bp.delay = delay;
    bp.cfg = cfg;
    bp.acfg = acfg;
    bp.harmonics = harmonics;

    const int steps = static_cast<int>(std::floor(180.0 / grid_step_deg + 1e-9));
    bp.angles_deg.reserve(static_cast<std::size_t>(steps) + 1);
    for (int g = 0; g <= steps; g++)
        bp.angles_deg.push_back(-90.0 + static_cast<double>(g) * grid_step_deg);
    if (bp.angles_deg.back() < 90.0 - 1e-9)
        bp.angles_deg.push_back(90.0);

    for (long long i : harmonics)
    {
        // Per-element complex excitation at this harmonic: coefficient
        // (uniform or per-antenna tapered) times the delay-chain phase.
        std::vector<cdouble> excitation(static_cast<std::size_t>(m_count));
        for (int m = 0; m < m_count; m++)
        {
            int dm = delay_override.empty() ? (m * delay) % d_count
                                            : delay_override[static_cast<std::size_t>(m)];
            cdouble coeff =
                taper_zeros.empty()
                    ? harmonic_coefficient(cfg.n_phases, i)
                    : tapered_coefficient(cfg.n_phases, 1 + i * cfg.n_phases, cfg.o_tau,
                                          taper_zeros[static_cast<std::size_t>(m)]);
            double line = 1.0 + static_cast<double>(cfg.n_phases) * static_cast<double>(i);
            double phase = -two_pi * static_cast<double>(dm) * line / static_cast<double>(d_count);
            excitation[static_cast<std::size_t>(m)] = coeff * cis(phase);
        }

        double freq_scale = 1.0;
        if (mode == af_mode::exact)
            freq_scale = 1.0 + harmonic_offset(cfg, i) / acfg.carrier_freq;

        std::vector<cdouble> row(bp.angles_deg.size());
        const double norm = 1.0 / std::sqrt(static_cast<double>(m_count));
        for (std::size_t g = 0; g < bp.angles_deg.size(); g++)
        {
            double sin_t = std::sin(deg2rad(bp.angles_deg[g]));
            cdouble acc = 0.0;
            for (int m = 0; m < m_count; m++)
                acc += excitation[static_cast<std::size_t>(m)] *
                       cis(-two_pi * static_cast<double>(m) * acfg.spacing_wl * sin_t * freq_scale);
            row[g] = acc * norm;
        }
        bp.values.push_back(std::move(row));
    }
    return bp;
}

} // namespace otma
