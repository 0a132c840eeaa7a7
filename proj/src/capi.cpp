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

#include "otma.h"

#include <string>
#include <utility>

#include "otma/beamformer.hpp"
#include "otma/config.hpp"
#include "otma/delayctl.hpp"
#include "otma/errors.hpp"
#include "otma/io.hpp"
#include "otma/modseq.hpp"
#include "otma/modulator.hpp"
#include "otma/oracle.hpp"
#include "otma/taper.hpp"
#include "otma/verification.hpp"
#include "otma/version.hpp"

// Opaque handle bodies.
struct otma_tma_config
{
    otma::tma_config v;
};
struct otma_array_config
{
    otma::array_config v;
};
struct otma_schedule
{
    otma::switch_schedule v;
};
struct otma_spectrum
{
    otma::harmonic_spectrum v;
};
struct otma_waveform
{
    otma::sampled_waveform v;
};
struct otma_replicas
{
    otma::replica_spectrum v;
};
struct otma_beampattern
{
    otma::beam_pattern v;
};
struct otma_verify_report
{
    otma::verify_report v;
};

namespace
{

thread_local std::string g_last_error;

void set_last_error(const std::string &msg) { g_last_error = msg; }

otma_status map_code(otma::error_code code)
{
    using otma::error_code;
    switch (code)
    {
    case error_code::none: return OTMA_OK;
    case error_code::invalid_argument: return OTMA_ERROR_INVALID_ARGUMENT;
    case error_code::non_positive_parameter: return OTMA_ERROR_NON_POSITIVE_PARAMETER;
    case error_code::phase_count_too_small: return OTMA_ERROR_PHASE_COUNT_TOO_SMALL;
    case error_code::index_out_of_range: return OTMA_ERROR_INDEX_OUT_OF_RANGE;
    case error_code::delay_out_of_range: return OTMA_ERROR_DELAY_OUT_OF_RANGE;
    case error_code::taper_out_of_range: return OTMA_ERROR_TAPER_OUT_OF_RANGE;
    case error_code::rate_mismatch: return OTMA_ERROR_RATE_MISMATCH;
    case error_code::no_taper_levels: return OTMA_ERROR_NO_TAPER_LEVELS;
    case error_code::invalid_grid: return OTMA_ERROR_INVALID_GRID;
    case error_code::invalid_config: return OTMA_ERROR_INVALID_CONFIG;
    case error_code::json_error: return OTMA_ERROR_JSON;
    case error_code::io_error: return OTMA_ERROR_IO;
    }
    return OTMA_ERROR_INTERNAL;
}

// Run `fn`, translating exceptions into status codes.
template <typename Fn> otma_status guarded(Fn &&fn) noexcept
{
    try
    {
        fn();
        return OTMA_OK;
    }
    catch (const otma::error &e)
    {
        set_last_error(e.what());
        return map_code(e.code());
    }
    catch (const std::exception &e)
    {
        set_last_error(e.what());
        return OTMA_ERROR_INTERNAL;
    }
    catch (...)
    {
        set_last_error("unknown error");
        return OTMA_ERROR_INTERNAL;
    }
}

otma_status fail_null(const char *what)
{
    set_last_error(std::string(what) + ": null pointer argument");
    return OTMA_ERROR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char *otma_version(void) { return otma::version_string; }

const char *otma_last_error(void) { return g_last_error.c_str(); }

/* --- configuration ----------------------------------------------------- */

otma_status otma_tma_config_create(int n_phases, int o_f, int o_tau, double sample_rate,
                                   otma_tma_config **out)
{
    if (!out)
        return fail_null("otma_tma_config_create");
    *out = nullptr;
    return guarded([&] {
        otma::tma_config cfg{n_phases, o_f, o_tau, sample_rate};
        otma::validate(cfg);
        *out = new otma_tma_config{cfg};
    });
}

otma_status otma_config_from_json(const char *json_text, otma_tma_config **tma_out,
                                  otma_array_config **array_out)
{
    if (!json_text || !tma_out)
        return fail_null("otma_config_from_json");
    *tma_out = nullptr;
    if (array_out)
        *array_out = nullptr;
    return guarded([&] {
        otma::loaded_config loaded = otma::config_from_json(json_text);
        *tma_out = new otma_tma_config{loaded.tma};
        if (array_out && loaded.array)
            *array_out = new otma_array_config{*loaded.array};
    });
}

otma_status otma_config_from_file(const char *path, otma_tma_config **tma_out,
                                  otma_array_config **array_out)
{
    if (!path || !tma_out)
        return fail_null("otma_config_from_file");
    *tma_out = nullptr;
    if (array_out)
        *array_out = nullptr;
    return guarded([&] {
        otma::loaded_config loaded = otma::config_from_file(path);
        *tma_out = new otma_tma_config{loaded.tma};
        if (array_out && loaded.array)
            *array_out = new otma_array_config{*loaded.array};
    });
}

void otma_tma_config_free(otma_tma_config *cfg) { delete cfg; }

#define OTMA_CONFIG_GETTER(name, type, expr)                                                       \
    otma_status name(const otma_tma_config *cfg, type *out)                                        \
    {                                                                                              \
        if (!cfg || !out)                                                                          \
            return fail_null(#name);                                                               \
        return guarded([&] { *out = (expr); });                                                    \
    }

OTMA_CONFIG_GETTER(otma_tma_config_get_n_phases, int, cfg->v.n_phases)
OTMA_CONFIG_GETTER(otma_tma_config_get_o_f, int, cfg->v.o_f)
OTMA_CONFIG_GETTER(otma_tma_config_get_o_tau, int, cfg->v.o_tau)
OTMA_CONFIG_GETTER(otma_tma_config_get_sample_rate, double, cfg->v.sample_rate)
OTMA_CONFIG_GETTER(otma_tma_config_get_oversampling, int, cfg->v.oversampling())
OTMA_CONFIG_GETTER(otma_tma_config_get_switch_rate, double, cfg->v.switch_rate())
OTMA_CONFIG_GETTER(otma_tma_config_get_slot_duration, double, cfg->v.slot_duration())
OTMA_CONFIG_GETTER(otma_tma_config_get_pulse_duration, double, cfg->v.pulse_duration())
OTMA_CONFIG_GETTER(otma_tma_config_get_pulse_rate, double, cfg->v.pulse_rate())
OTMA_CONFIG_GETTER(otma_tma_config_get_mod_rate, double, cfg->v.mod_rate())

#undef OTMA_CONFIG_GETTER

otma_status otma_array_config_create(int n_antennas, double spacing_wl, double carrier_freq,
                                     otma_array_config **out)
{
    if (!out)
        return fail_null("otma_array_config_create");
    *out = nullptr;
    return guarded([&] {
        otma::array_config cfg{n_antennas, spacing_wl, carrier_freq};
        otma::validate(cfg);
        *out = new otma_array_config{cfg};
    });
}

void otma_array_config_free(otma_array_config *cfg) { delete cfg; }

otma_status otma_array_config_get_n_antennas(const otma_array_config *cfg, int *out)
{
    if (!cfg || !out)
        return fail_null("otma_array_config_get_n_antennas");
    *out = cfg->v.n_antennas;
    return OTMA_OK;
}

otma_status otma_array_config_get_spacing_wl(const otma_array_config *cfg, double *out)
{
    if (!cfg || !out)
        return fail_null("otma_array_config_get_spacing_wl");
    *out = cfg->v.spacing_wl;
    return OTMA_OK;
}

otma_status otma_array_config_get_carrier_freq(const otma_array_config *cfg, double *out)
{
    if (!cfg || !out)
        return fail_null("otma_array_config_get_carrier_freq");
    *out = cfg->v.carrier_freq;
    return OTMA_OK;
}

/* --- schedule ---------------------------------------------------------- */

otma_status otma_state_phase(int n_phases, int state, double *out)
{
    if (!out)
        return fail_null("otma_state_phase");
    return guarded([&] { *out = otma::state_phase(n_phases, state); });
}

otma_status otma_schedule_build(const otma_tma_config *cfg, int delay, int taper_zeros,
                                otma_schedule **out)
{
    if (!cfg || !out)
        return fail_null("otma_schedule_build");
    *out = nullptr;
    return guarded([&] { *out = new otma_schedule{otma::build_schedule(cfg->v, delay, taper_zeros)}; });
}

void otma_schedule_free(otma_schedule *sched) { delete sched; }

otma_status otma_schedule_period_slots(const otma_schedule *sched, int *out)
{
    if (!sched || !out)
        return fail_null("otma_schedule_period_slots");
    *out = sched->v.period_slots();
    return OTMA_OK;
}

otma_status otma_schedule_slot_state(const otma_schedule *sched, int slot, int *out)
{
    if (!sched || !out)
        return fail_null("otma_schedule_slot_state");
    return guarded([&] {
        if (slot < 0 || slot >= sched->v.period_slots())
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_schedule_slot_state: slot outside the period");
        *out = sched->v.slots[static_cast<std::size_t>(slot)];
    });
}

otma_status otma_schedule_slot_duration(const otma_schedule *sched, double *out)
{
    if (!sched || !out)
        return fail_null("otma_schedule_slot_duration");
    *out = sched->v.slot_duration;
    return OTMA_OK;
}

otma_status otma_schedule_write_csv(const otma_schedule *sched, const char *path,
                                    int samples_per_slot)
{
    if (!sched || !path)
        return fail_null("otma_schedule_write_csv");
    return guarded([&] { otma::write_schedule_csv(path, sched->v, samples_per_slot); });
}

/* --- closed-form spectra ------------------------------------------------ */

otma_status otma_pulse_coefficient(int n_phases, int state, long long k, double *re, double *im)
{
    if (!re || !im)
        return fail_null("otma_pulse_coefficient");
    return guarded([&] {
        otma::cdouble c = otma::pulse_coefficient(n_phases, state, k);
        *re = c.real();
        *im = c.imag();
    });
}

otma_status otma_sequence_coefficient(int n_phases, long long k, double *re, double *im)
{
    if (!re || !im)
        return fail_null("otma_sequence_coefficient");
    return guarded([&] {
        otma::cdouble c = otma::sequence_coefficient(n_phases, k);
        *re = c.real();
        *im = c.imag();
    });
}

otma_status otma_harmonic_coefficient(int n_phases, long long i, double *re, double *im)
{
    if (!re || !im)
        return fail_null("otma_harmonic_coefficient");
    return guarded([&] {
        otma::cdouble c = otma::harmonic_coefficient(n_phases, i);
        *re = c.real();
        *im = c.imag();
    });
}

otma_status otma_harmonic_power_db(int n_phases, long long i, double *out)
{
    if (!out)
        return fail_null("otma_harmonic_power_db");
    return guarded([&] { *out = otma::harmonic_power_db(n_phases, i); });
}

otma_status otma_spectrum_compute(const otma_tma_config *cfg, int i_max, otma_spectrum **out)
{
    if (!cfg || !out)
        return fail_null("otma_spectrum_compute");
    *out = nullptr;
    return guarded([&] { *out = new otma_spectrum{otma::spectrum(cfg->v, i_max)}; });
}

void otma_spectrum_free(otma_spectrum *spec) { delete spec; }

otma_status otma_spectrum_size(const otma_spectrum *spec, int *out)
{
    if (!spec || !out)
        return fail_null("otma_spectrum_size");
    *out = static_cast<int>(spec->v.entries.size());
    return OTMA_OK;
}

otma_status otma_spectrum_entry(const otma_spectrum *spec, int idx, long long *harmonic,
                                double *freq_hz, double *re, double *im)
{
    if (!spec || !harmonic || !freq_hz || !re || !im)
        return fail_null("otma_spectrum_entry");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int>(spec->v.entries.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_spectrum_entry: index outside the spectrum");
        const otma::harmonic_entry &e = spec->v.entries[static_cast<std::size_t>(idx)];
        *harmonic = e.harmonic;
        *freq_hz = e.freq_hz;
        *re = e.coeff.real();
        *im = e.coeff.imag();
    });
}

/* --- delay control ------------------------------------------------------ */

otma_status otma_num_delays(const otma_tma_config *cfg, int *out)
{
    if (!cfg || !out)
        return fail_null("otma_num_delays");
    return guarded([&] { *out = otma::num_delays(cfg->v); });
}

otma_status otma_delay_phase(const otma_tma_config *cfg, long long harmonic, int delay,
                             double *out)
{
    if (!cfg || !out)
        return fail_null("otma_delay_phase");
    return guarded([&] { *out = otma::delay_phase(cfg->v, harmonic, delay); });
}

otma_status otma_phase_resolution(const otma_tma_config *cfg, double *out)
{
    if (!cfg || !out)
        return fail_null("otma_phase_resolution");
    return guarded([&] { *out = otma::phase_resolution(cfg->v); });
}

otma_status otma_effective_bits(const otma_tma_config *cfg, double *out)
{
    if (!cfg || !out)
        return fail_null("otma_effective_bits");
    return guarded([&] { *out = otma::effective_bits(cfg->v); });
}

/* --- tapering ----------------------------------------------------------- */

otma_status otma_duty_factor(int o_tau, int zeros, double *out)
{
    if (!out)
        return fail_null("otma_duty_factor");
    return guarded([&] { *out = otma::duty_factor(o_tau, zeros); });
}

otma_status otma_amplitude_levels(int o_tau, double *levels, int *count)
{
    if (!count)
        return fail_null("otma_amplitude_levels");
    return guarded([&] {
        std::vector<double> vals = otma::amplitude_levels(o_tau);
        if (levels)
            for (std::size_t idx = 0; idx < vals.size(); idx++)
                levels[idx] = vals[idx];
        *count = static_cast<int>(vals.size());
    });
}

otma_status otma_tapered_coefficient(int n_phases, long long k, int o_tau, int zeros, double *re,
                                     double *im)
{
    if (!re || !im)
        return fail_null("otma_tapered_coefficient");
    return guarded([&] {
        otma::cdouble c = otma::tapered_coefficient(n_phases, k, o_tau, zeros);
        *re = c.real();
        *im = c.imag();
    });
}

otma_status otma_taper_phase_offset(int n_phases, long long k, int o_tau, int zeros, double *out)
{
    if (!out)
        return fail_null("otma_taper_phase_offset");
    return guarded([&] { *out = otma::taper_phase_offset(n_phases, k, o_tau, zeros); });
}

otma_status otma_worst_case_harmonic_gain_db(int n_phases, int o_tau, int i_max, double *out)
{
    if (!out)
        return fail_null("otma_worst_case_harmonic_gain_db");
    return guarded([&] { *out = otma::worst_case_harmonic_gain_db(n_phases, o_tau, i_max); });
}

/* --- waveforms ----------------------------------------------------------- */

otma_status otma_waveform_make_test(const otma_tma_config *cfg, int n_symbols, uint64_t seed,
                                    int samples_per_slot, otma_waveform **out)
{
    if (!cfg || !out)
        return fail_null("otma_waveform_make_test");
    *out = nullptr;
    return guarded([&] {
        *out = new otma_waveform{
            otma::make_test_baseband(cfg->v, n_symbols, seed, samples_per_slot)};
    });
}

otma_status otma_waveform_make_constant(const otma_tma_config *cfg, int n_symbols,
                                        int samples_per_slot, otma_waveform **out)
{
    if (!cfg || !out)
        return fail_null("otma_waveform_make_constant");
    *out = nullptr;
    return guarded([&] {
        *out = new otma_waveform{otma::make_constant_baseband(cfg->v, n_symbols, samples_per_slot)};
    });
}

otma_status otma_waveform_modulate(const otma_waveform *s, const otma_tma_config *cfg, int delay,
                                   int taper_zeros, otma_waveform **out)
{
    if (!s || !cfg || !out)
        return fail_null("otma_waveform_modulate");
    *out = nullptr;
    return guarded([&] {
        *out = new otma_waveform{otma::modulate(s->v, cfg->v, delay, taper_zeros)};
    });
}

void otma_waveform_free(otma_waveform *w) { delete w; }

otma_status otma_waveform_size(const otma_waveform *w, int64_t *out)
{
    if (!w || !out)
        return fail_null("otma_waveform_size");
    *out = static_cast<int64_t>(w->v.samples.size());
    return OTMA_OK;
}

otma_status otma_waveform_rate(const otma_waveform *w, double *out)
{
    if (!w || !out)
        return fail_null("otma_waveform_rate");
    *out = w->v.rate;
    return OTMA_OK;
}

otma_status otma_waveform_sample(const otma_waveform *w, int64_t idx, double *re, double *im)
{
    if (!w || !re || !im)
        return fail_null("otma_waveform_sample");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int64_t>(w->v.samples.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_waveform_sample: index outside the waveform");
        const otma::cdouble &v = w->v.samples[static_cast<std::size_t>(idx)];
        *re = v.real();
        *im = v.imag();
    });
}

otma_status otma_waveform_mean_power(const otma_waveform *w, double *out)
{
    if (!w || !out)
        return fail_null("otma_waveform_mean_power");
    *out = w->v.mean_power();
    return OTMA_OK;
}

otma_status otma_waveform_write_spectrum_csv(const otma_waveform *w, const char *path)
{
    if (!w || !path)
        return fail_null("otma_waveform_write_spectrum_csv");
    return guarded([&] { otma::write_spectrum_csv(path, w->v); });
}

/* --- replicas ------------------------------------------------------------ */

otma_status otma_replicas_predict(const otma_tma_config *cfg, int delay, int i_max,
                                  otma_replicas **out)
{
    if (!cfg || !out)
        return fail_null("otma_replicas_predict");
    *out = nullptr;
    return guarded([&] { *out = new otma_replicas{otma::predict_replicas(cfg->v, delay, i_max)}; });
}

otma_status otma_replicas_sampled(const otma_tma_config *cfg, int delay, int taper_zeros,
                                  int samples_per_slot, otma_replicas **out)
{
    if (!cfg || !out)
        return fail_null("otma_replicas_sampled");
    *out = nullptr;
    return guarded([&] {
        *out = new otma_replicas{
            otma::sampled_replicas(cfg->v, delay, taper_zeros, samples_per_slot)};
    });
}

void otma_replicas_free(otma_replicas *rep) { delete rep; }

otma_status otma_replicas_size(const otma_replicas *rep, int *out)
{
    if (!rep || !out)
        return fail_null("otma_replicas_size");
    *out = static_cast<int>(rep->v.entries.size());
    return OTMA_OK;
}

otma_status otma_replicas_entry(const otma_replicas *rep, int idx, long long *harmonic,
                                double *center_freq_hz, double *re, double *im)
{
    if (!rep || !harmonic || !center_freq_hz || !re || !im)
        return fail_null("otma_replicas_entry");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int>(rep->v.entries.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_replicas_entry: index outside the table");
        const otma::replica_entry &e = rep->v.entries[static_cast<std::size_t>(idx)];
        *harmonic = e.harmonic;
        *center_freq_hz = e.center_freq_hz;
        *re = e.weight.real();
        *im = e.weight.imag();
    });
}

otma_status otma_replicas_truncated_power(const otma_tma_config *cfg, int delay, int taper_zeros,
                                          int samples_per_slot, const otma_replicas *rep,
                                          double *out)
{
    if (!cfg || !rep || !out)
        return fail_null("otma_replicas_truncated_power");
    return guarded([&] {
        *out = otma::truncated_power_fraction(cfg->v, delay, taper_zeros, samples_per_slot,
                                              rep->v);
    });
}

otma_status otma_verify_replicas(const otma_waveform *y, const otma_replicas *predicted,
                                 const otma_waveform *s, double *out)
{
    if (!y || !predicted || !s || !out)
        return fail_null("otma_verify_replicas");
    return guarded([&] { *out = otma::verify_replicas(y->v, predicted->v, s->v); });
}

otma_status otma_replicas_write_json(const otma_replicas *rep, const char *path)
{
    if (!rep || !path)
        return fail_null("otma_replicas_write_json");
    return guarded([&] { otma::write_replicas_json(path, rep->v); });
}

/* --- beamforming ---------------------------------------------------------- */

otma_status otma_antenna_phase(const otma_tma_config *cfg, int antenna, long long harmonic,
                               int delay, double *out)
{
    if (!cfg || !out)
        return fail_null("otma_antenna_phase");
    return guarded([&] { *out = otma::antenna_phase(cfg->v, antenna, harmonic, delay); });
}

otma_status otma_array_factor(const otma_array_config *acfg, const otma_tma_config *cfg,
                              double theta_deg, long long harmonic, int delay, int mode,
                              double *re, double *im)
{
    if (!acfg || !cfg || !re || !im)
        return fail_null("otma_array_factor");
    return guarded([&] {
        otma::cdouble c =
            otma::array_factor(acfg->v, cfg->v, theta_deg, harmonic, delay,
                               mode ? otma::af_mode::exact : otma::af_mode::simplified);
        *re = c.real();
        *im = c.imag();
    });
}

otma_status otma_beam_direction(const otma_tma_config *cfg, const otma_array_config *acfg,
                                long long harmonic, int delay, int *exists, double *out)
{
    if (!cfg || !acfg || !exists || !out)
        return fail_null("otma_beam_direction");
    return guarded([&] {
        std::optional<double> dir = otma::beam_direction(cfg->v, acfg->v, harmonic, delay);
        *exists = dir.has_value() ? 1 : 0;
        if (dir)
            *out = *dir;
    });
}

otma_status otma_beampattern_sweep(const otma_array_config *acfg, const otma_tma_config *cfg,
                                   int delay, const long long *harmonics, int n_harmonics,
                                   double grid_step_deg, const int *taper_zeros,
                                   const int *delay_override, int mode, otma_beampattern **out)
{
    if (!acfg || !cfg || !harmonics || !out)
        return fail_null("otma_beampattern_sweep");
    if (n_harmonics < 1)
    {
        set_last_error("otma_beampattern_sweep: n_harmonics must be >= 1");
        return OTMA_ERROR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        std::vector<long long> h(harmonics, harmonics + n_harmonics);
        std::vector<int> tz, dl;
        if (taper_zeros)
            tz.assign(taper_zeros, taper_zeros + acfg->v.n_antennas);
        if (delay_override)
            dl.assign(delay_override, delay_override + acfg->v.n_antennas);
        *out = new otma_beampattern{otma::beampattern_sweep(
            acfg->v, cfg->v, delay, h, grid_step_deg, tz, dl,
            mode ? otma::af_mode::exact : otma::af_mode::simplified)};
    });
}

void otma_beampattern_free(otma_beampattern *bp) { delete bp; }

otma_status otma_beampattern_n_angles(const otma_beampattern *bp, int *out)
{
    if (!bp || !out)
        return fail_null("otma_beampattern_n_angles");
    *out = static_cast<int>(bp->v.angles_deg.size());
    return OTMA_OK;
}

otma_status otma_beampattern_angle(const otma_beampattern *bp, int idx, double *out)
{
    if (!bp || !out)
        return fail_null("otma_beampattern_angle");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int>(bp->v.angles_deg.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_beampattern_angle: index outside the grid");
        *out = bp->v.angles_deg[static_cast<std::size_t>(idx)];
    });
}

otma_status otma_beampattern_n_harmonics(const otma_beampattern *bp, int *out)
{
    if (!bp || !out)
        return fail_null("otma_beampattern_n_harmonics");
    *out = static_cast<int>(bp->v.harmonics.size());
    return OTMA_OK;
}

otma_status otma_beampattern_harmonic(const otma_beampattern *bp, int row, long long *out)
{
    if (!bp || !out)
        return fail_null("otma_beampattern_harmonic");
    return guarded([&] {
        if (row < 0 || row >= static_cast<int>(bp->v.harmonics.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_beampattern_harmonic: row outside the pattern");
        *out = bp->v.harmonics[static_cast<std::size_t>(row)];
    });
}

otma_status otma_beampattern_value(const otma_beampattern *bp, int row, int angle_idx, double *re,
                                   double *im)
{
    if (!bp || !re || !im)
        return fail_null("otma_beampattern_value");
    return guarded([&] {
        if (row < 0 || row >= static_cast<int>(bp->v.values.size()) || angle_idx < 0 ||
            angle_idx >= static_cast<int>(bp->v.angles_deg.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_beampattern_value: index outside the pattern");
        const otma::cdouble &v =
            bp->v.values[static_cast<std::size_t>(row)][static_cast<std::size_t>(angle_idx)];
        *re = v.real();
        *im = v.imag();
    });
}

otma_status otma_beampattern_write_csv(const otma_beampattern *const *patterns, int n_patterns,
                                       const char *metadata_json, const char *path)
{
    if (!patterns || !metadata_json || !path)
        return fail_null("otma_beampattern_write_csv");
    if (n_patterns < 1)
    {
        set_last_error("otma_beampattern_write_csv: n_patterns must be >= 1");
        return OTMA_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<otma::beam_pattern> list;
        list.reserve(static_cast<std::size_t>(n_patterns));
        for (int p = 0; p < n_patterns; p++)
        {
            if (!patterns[p])
                otma::throw_error(otma::error_code::invalid_argument,
                                  "otma_beampattern_write_csv: null pattern");
            list.push_back(patterns[p]->v);
        }
        otma::write_beampattern_csv(path, list, metadata_json);
    });
}

/* --- verification ---------------------------------------------------------- */

otma_status otma_verify_run(int samples_per_slot, int inject_fault, otma_verify_report **out)
{
    if (!out)
        return fail_null("otma_verify_run");
    *out = nullptr;
    return guarded([&] {
        otma::verify_options opt;
        if (samples_per_slot > 0)
            opt.samples_per_slot = samples_per_slot;
        opt.inject_fault = inject_fault != 0;
        *out = new otma_verify_report{otma::run_verification(opt)};
    });
}

void otma_verify_report_free(otma_verify_report *report) { delete report; }

otma_status otma_verify_report_size(const otma_verify_report *report, int *out)
{
    if (!report || !out)
        return fail_null("otma_verify_report_size");
    *out = static_cast<int>(report->v.checks.size());
    return OTMA_OK;
}

otma_status otma_verify_report_passed(const otma_verify_report *report, int *out)
{
    if (!report || !out)
        return fail_null("otma_verify_report_passed");
    *out = report->v.all_passed() ? 1 : 0;
    return OTMA_OK;
}

otma_status otma_verify_report_check(const otma_verify_report *report, int idx, const char **name,
                                     double *max_error, double *threshold, int *passed,
                                     const char **detail)
{
    if (!report || !name || !max_error || !threshold || !passed || !detail)
        return fail_null("otma_verify_report_check");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int>(report->v.checks.size()))
            otma::throw_error(otma::error_code::index_out_of_range,
                              "otma_verify_report_check: index outside the report");
        const otma::verify_check &c = report->v.checks[static_cast<std::size_t>(idx)];
        *name = c.name.c_str();
        *max_error = c.max_error;
        *threshold = c.threshold;
        *passed = c.passed ? 1 : 0;
        *detail = c.detail.c_str();
    });
}

} /* extern "C" */
