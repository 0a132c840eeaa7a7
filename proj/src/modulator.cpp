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

#include "otma/modulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "otma/delayctl.hpp"
#include "otma/dft.hpp"
#include "otma/errors.hpp"
#include "otma/modseq.hpp"
#include "otma/oracle.hpp"

namespace otma
{

// Smallest multiple of N/gcd(o_f, N) that is >= n_symbols: with n symbols the
// window spans n/f_s seconds = n*o_f/N schedule periods, so this choice makes
// the window an integer number of schedule periods.
static int round_up_symbols(const tma_config &cfg, int n_symbols)
{
    int r = cfg.n_phases / std::gcd(cfg.o_f, cfg.n_phases);
    return ((n_symbols + r - 1) / r) * r;
}

// Circular band-limited interpolation of a symbol stream to K*f_sw, then
// exact unit-power normalization.
static sampled_waveform interpolate_symbols(const tma_config &cfg,
                                            const std::vector<cdouble> &symbols,
                                            int samples_per_slot)
{
    const int n = static_cast<int>(symbols.size());
    const int upsample = samples_per_slot * cfg.oversampling();
    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(upsample);

    std::vector<cdouble> sym_spec = dft(symbols);
    std::vector<cdouble> padded(total, cdouble{0.0, 0.0});
    for (int q_idx = 0; q_idx < n; q_idx++)
    {
        // Signed line index in [-floor(n/2), ceil(n/2)) keeps the
        // interpolation band-limited to +-f_s/2.
        long long q = (q_idx < (n + 1) / 2) ? q_idx : q_idx - n;
        padded[static_cast<std::size_t>(mod_floor(q, static_cast<long long>(total)))] =
            sym_spec[static_cast<std::size_t>(q_idx)];
    }

    sampled_waveform w;
    w.samples = idft(padded);
    const double gain = static_cast<double>(upsample); // idft normalizes by 1/total
    for (cdouble &v : w.samples)
        v *= gain;
    w.rate = static_cast<double>(samples_per_slot) * cfg.switch_rate();

    double mp = w.mean_power();
    if (mp > 0.0)
    {
        double scale = 1.0 / std::sqrt(mp);
        for (cdouble &v : w.samples)
            v *= scale;
    }
    return w;
}

static void check_baseband_args(int n_symbols, int samples_per_slot)
{
    if (n_symbols < 1)
        throw_error(error_code::non_positive_parameter, "make_test_baseband: n_symbols must be >= 1");
    if (samples_per_slot < 2)
        throw_error(error_code::invalid_argument,
                    "make_test_baseband: samples_per_slot must be >= 2");
}

sampled_waveform make_test_baseband(const tma_config &cfg, int n_symbols, std::uint64_t seed,
                                    int samples_per_slot)
{
    validate(cfg);
    check_baseband_args(n_symbols, samples_per_slot);
    const int n = round_up_symbols(cfg, n_symbols);

    // Raw generator bits, not a distribution adapter: mt19937_64 output is
    // specified by the standard, so the stream is identical on any platform.
    std::mt19937_64 rng(seed);
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cdouble> symbols(static_cast<std::size_t>(n));
    for (cdouble &s : symbols)
    {
        switch (rng() & 3u)
        {
        case 0: s = {a, a}; break;
        case 1: s = {-a, a}; break;
        case 2: s = {-a, -a}; break;
        default: s = {a, -a}; break;
        }
    }
    return interpolate_symbols(cfg, symbols, samples_per_slot);
}

sampled_waveform make_constant_baseband(const tma_config &cfg, int n_symbols,
                                        int samples_per_slot)
{
    validate(cfg);
    check_baseband_args(n_symbols, samples_per_slot);
    const int n = round_up_symbols(cfg, n_symbols);
    std::vector<cdouble> symbols(static_cast<std::size_t>(n), cdouble{1.0, 0.0});
    return interpolate_symbols(cfg, symbols, samples_per_slot);
}

// Samples per slot implied by the waveform rate, or rate_mismatch.
static int slot_samples(const sampled_waveform &s, const tma_config &cfg, const char *who)
{
    const double ratio = s.rate / cfg.switch_rate();
    const long long k = std::llround(ratio);
    if (k < 1 || std::abs(ratio - static_cast<double>(k)) > 1e-9 * std::max(1.0, ratio))
        throw_error(error_code::rate_mismatch,
                    std::string(who) + ": waveform rate " + std::to_string(s.rate) +
                        " is not an integer multiple of the switching rate " +
                        std::to_string(cfg.switch_rate()));
    return static_cast<int>(k);
}

sampled_waveform modulate(const sampled_waveform &s, const tma_config &cfg, int delay,
                          int taper_zeros)
{
    validate(cfg);
    const int k = slot_samples(s, cfg, "modulate");
    const switch_schedule sched = build_schedule(cfg, delay, taper_zeros);
    const std::size_t period = sched.slots.size();

    sampled_waveform y;
    y.rate = s.rate;
    y.samples.resize(s.samples.size());
    for (std::size_t t = 0; t < s.samples.size(); t++)
    {
        int slot = sched.slots[(t / static_cast<std::size_t>(k)) % period];
        y.samples[t] = (slot == off_slot)
                           ? cdouble{0.0, 0.0}
                           : s.samples[t] * cis(state_phase(sched.n_phases, slot));
    }
    return y;
}

replica_spectrum predict_replicas(const tma_config &cfg, int delay, int i_max)
{
    validate(cfg);
    if (i_max < 0)
        throw_error(error_code::invalid_argument, "predict_replicas: i_max must be >= 0");

    replica_spectrum rep;
    rep.band_hz = cfg.sample_rate;
    rep.entries.reserve(static_cast<std::size_t>(2 * i_max + 1));
    for (long long i = -i_max; i <= i_max; i++)
    {
        replica_entry e;
        e.harmonic = i;
        e.center_freq_hz = cfg.mod_rate() + static_cast<double>(i) * cfg.pulse_rate();
        e.weight = harmonic_coefficient(cfg.n_phases, i) * cis(delay_phase(cfg, i, delay));
        rep.entries.push_back(e);
    }
    return rep;
}

replica_spectrum sampled_replicas(const tma_config &cfg, int delay, int taper_zeros,
                                  int samples_per_slot)
{
    validate(cfg);
    const oracle_result lines =
        schedule_coefficients(build_schedule(cfg, delay, taper_zeros), samples_per_slot,
                              /*zoh_correction=*/false);
    const long long period_lines = static_cast<long long>(lines.size());

    replica_spectrum rep;
    rep.band_hz = cfg.sample_rate;
    for (long long k = -(period_lines / 2); k < period_lines - period_lines / 2; k++)
    {
        if (mod_floor(k, cfg.n_phases) != 1 % cfg.n_phases)
            continue; // identically zero line of the schedule spectrum
        replica_entry e;
        e.harmonic = (k - 1) / cfg.n_phases;
        e.center_freq_hz = static_cast<double>(k) * cfg.mod_rate();
        e.weight = lines.coefficient(k);
        rep.entries.push_back(e);
    }
    return rep;
}

double truncated_power_fraction(const tma_config &cfg, int delay, int taper_zeros,
                                int samples_per_slot, const replica_spectrum &rep)
{
    validate(cfg);
    const oracle_result lines =
        schedule_coefficients(build_schedule(cfg, delay, taper_zeros), samples_per_slot,
                              /*zoh_correction=*/false);
    double total = 0.0;
    for (const cdouble &b : lines.bins)
        total += std::norm(b);
    double covered = 0.0;
    for (const replica_entry &e : rep.entries)
        covered += std::norm(e.weight);
    if (total <= 0.0)
        return 0.0;
    double frac = (total - covered) / total;
    return frac > 0.0 ? frac : 0.0;
}

double verify_replicas(const sampled_waveform &y, const replica_spectrum &predicted,
                       const sampled_waveform &s)
{
    if (y.samples.size() != s.samples.size() || y.rate != s.rate)
        throw_error(error_code::rate_mismatch,
                    "verify_replicas: y and s must share rate and length");
    if (y.samples.empty())
        throw_error(error_code::invalid_argument, "verify_replicas: empty waveforms");

    const long long total = static_cast<long long>(y.samples.size());
    const std::vector<cdouble> y_spec = dft(y.samples);
    const std::vector<cdouble> s_spec = dft(s.samples);

    std::vector<cdouble> predicted_spec(y_spec.size(), cdouble{0.0, 0.0});
    for (const replica_entry &e : predicted.entries)
    {
        double bins = e.center_freq_hz * static_cast<double>(total) / y.rate;
        long long shift = std::llround(bins);
        if (std::abs(bins - static_cast<double>(shift)) > 1e-6)
            throw_error(error_code::invalid_argument,
                        "verify_replicas: replica center " + std::to_string(e.center_freq_hz) +
                            " Hz does not fall on a DFT bin of the window");
        for (long long b = 0; b < total; b++)
            predicted_spec[static_cast<std::size_t>(b)] +=
                e.weight * s_spec[static_cast<std::size_t>(mod_floor(b - shift, total))];
    }

    double err = 0.0, ref = 0.0;
    for (std::size_t b = 0; b < y_spec.size(); b++)
    {
        err += std::norm(y_spec[b] - predicted_spec[b]);
        ref += std::norm(y_spec[b]);
    }
    if (ref <= 0.0)
        return err <= 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(err / ref);
}

} // namespace otma
