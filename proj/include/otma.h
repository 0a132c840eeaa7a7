/* SPDX-License-Identifier: Apache-2.0
 *
 * otma - oversampled time-modulated array simulation library
 * Copyright (C) 2026 otma developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of libotma. All entry points return an otma_status; results
 * travel through out parameters. Objects are opaque handles released with
 * their matching _free function (NULL is always safe to free). On error,
 * otma_last_error() returns a thread-local description of the most recent
 * failure on the calling thread.
 */

#ifndef OTMA_H
#define OTMA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum otma_status
{
    OTMA_OK = 0,
    OTMA_ERROR_INVALID_ARGUMENT = 1,
    OTMA_ERROR_NON_POSITIVE_PARAMETER = 2,
    OTMA_ERROR_PHASE_COUNT_TOO_SMALL = 3,
    OTMA_ERROR_INDEX_OUT_OF_RANGE = 4,
    OTMA_ERROR_DELAY_OUT_OF_RANGE = 5,
    OTMA_ERROR_TAPER_OUT_OF_RANGE = 6,
    OTMA_ERROR_RATE_MISMATCH = 7,
    OTMA_ERROR_NO_TAPER_LEVELS = 8,
    OTMA_ERROR_INVALID_GRID = 9,
    OTMA_ERROR_INVALID_CONFIG = 10,
    OTMA_ERROR_JSON = 11,
    OTMA_ERROR_IO = 12,
    OTMA_ERROR_INTERNAL = 13
} otma_status;

typedef struct otma_tma_config otma_tma_config;
typedef struct otma_array_config otma_array_config;
typedef struct otma_schedule otma_schedule;
typedef struct otma_spectrum otma_spectrum;
typedef struct otma_waveform otma_waveform;
typedef struct otma_replicas otma_replicas;
typedef struct otma_beampattern otma_beampattern;
typedef struct otma_verify_report otma_verify_report;

/* Library version string ("major.minor.patch"). */
const char *otma_version(void);

/* Thread-local message for the last failing call on this thread ("" if none). */
const char *otma_last_error(void);

/* ----------------------------------------------------------------------- */
/* Configuration                                                           */
/* ----------------------------------------------------------------------- */

/* Validated modulation configuration. sample_rate in Hz. */
otma_status otma_tma_config_create(int n_phases, int o_f, int o_tau, double sample_rate,
                                   otma_tma_config **out);
/* Parse the JSON configuration document. The optional "array" block goes to
 * *array_out when both pointers are given; *array_out is NULL if absent. */
otma_status otma_config_from_json(const char *json_text, otma_tma_config **tma_out,
                                  otma_array_config **array_out);
otma_status otma_config_from_file(const char *path, otma_tma_config **tma_out,
                                  otma_array_config **array_out);
void otma_tma_config_free(otma_tma_config *cfg);

otma_status otma_tma_config_get_n_phases(const otma_tma_config *cfg, int *out);
otma_status otma_tma_config_get_o_f(const otma_tma_config *cfg, int *out);
otma_status otma_tma_config_get_o_tau(const otma_tma_config *cfg, int *out);
otma_status otma_tma_config_get_sample_rate(const otma_tma_config *cfg, double *out);
otma_status otma_tma_config_get_oversampling(const otma_tma_config *cfg, int *out);
otma_status otma_tma_config_get_switch_rate(const otma_tma_config *cfg, double *out);
otma_status otma_tma_config_get_slot_duration(const otma_tma_config *cfg, double *out);
otma_status otma_tma_config_get_pulse_duration(const otma_tma_config *cfg, double *out);
otma_status otma_tma_config_get_pulse_rate(const otma_tma_config *cfg, double *out);
otma_status otma_tma_config_get_mod_rate(const otma_tma_config *cfg, double *out);

/* Uniform linear array description. spacing_wl in carrier wavelengths. */
otma_status otma_array_config_create(int n_antennas, double spacing_wl, double carrier_freq,
                                     otma_array_config **out);
void otma_array_config_free(otma_array_config *cfg);
otma_status otma_array_config_get_n_antennas(const otma_array_config *cfg, int *out);
otma_status otma_array_config_get_spacing_wl(const otma_array_config *cfg, double *out);
otma_status otma_array_config_get_carrier_freq(const otma_array_config *cfg, double *out);

/* ----------------------------------------------------------------------- */
/* Modulating schedule                                                     */
/* ----------------------------------------------------------------------- */

/* Phase of state index `state`: 2*pi*state/n_phases. */
otma_status otma_state_phase(int n_phases, int state, double *out);

/* One period of the modulating schedule, cyclically right-shifted by `delay`
 * slots with the trailing `taper_zeros` slots of every pulse switched off. */
otma_status otma_schedule_build(const otma_tma_config *cfg, int delay, int taper_zeros,
                                otma_schedule **out);
void otma_schedule_free(otma_schedule *sched);
otma_status otma_schedule_period_slots(const otma_schedule *sched, int *out);
/* State index of slot `slot` (-1 when the switch is open). */
otma_status otma_schedule_slot_state(const otma_schedule *sched, int slot, int *out);
otma_status otma_schedule_slot_duration(const otma_schedule *sched, double *out);
/* CSV dump: slot_index, time_s, state_index, phase_rad, re, im. */
otma_status otma_schedule_write_csv(const otma_schedule *sched, const char *path,
                                    int samples_per_slot);

/* ----------------------------------------------------------------------- */
/* Closed-form spectra                                                     */
/* ----------------------------------------------------------------------- */

/* Fourier coefficient of a single pulse of state `state` at line k. */
otma_status otma_pulse_coefficient(int n_phases, int state, long long k, double *re, double *im);
/* Fourier coefficient of the full modulating sequence at line k. */
otma_status otma_sequence_coefficient(int n_phases, long long k, double *re, double *im);
/* Coefficient of replica i (line k = 1 + i*n_phases). */
otma_status otma_harmonic_coefficient(int n_phases, long long i, double *re, double *im);
/* Replica power relative to the modulated signal, dB. */
otma_status otma_harmonic_power_db(int n_phases, long long i, double *out);

/* All replica lines |i| <= i_max for a configuration. */
otma_status otma_spectrum_compute(const otma_tma_config *cfg, int i_max, otma_spectrum **out);
void otma_spectrum_free(otma_spectrum *spec);
otma_status otma_spectrum_size(const otma_spectrum *spec, int *out);
otma_status otma_spectrum_entry(const otma_spectrum *spec, int idx, long long *harmonic,
                                double *freq_hz, double *re, double *im);

/* ----------------------------------------------------------------------- */
/* Delay control                                                           */
/* ----------------------------------------------------------------------- */

/* Number of distinct cyclic delays D = n_phases * o_tau. */
otma_status otma_num_delays(const otma_tma_config *cfg, int *out);
/* Phase imposed on replica i by delay d, wrapped to (-pi, pi]. */
otma_status otma_delay_phase(const otma_tma_config *cfg, long long harmonic, int delay,
                             double *out);
/* Main-replica phase step between adjacent delays, 2*pi/D. */
otma_status otma_phase_resolution(const otma_tma_config *cfg, double *out);
/* Effective phase-shifter bits, log2(D). */
otma_status otma_effective_bits(const otma_tma_config *cfg, double *out);

/* ----------------------------------------------------------------------- */
/* Tapering                                                                */
/* ----------------------------------------------------------------------- */

/* Duty factor (o_tau - zeros) / o_tau. */
otma_status otma_duty_factor(int o_tau, int zeros, double *out);
/* Realizable amplitude levels {0, 1/o_tau, ..., 1}; *count = o_tau + 1.
 * Pass levels = NULL to query the count first. */
otma_status otma_amplitude_levels(int o_tau, double *levels, int *count);
/* Coefficient of the tapered sequence at line k. */
otma_status otma_tapered_coefficient(int n_phases, long long k, int o_tau, int zeros, double *re,
                                     double *im);
/* Phase of the tapered coefficient relative to the untapered one at line k. */
otma_status otma_taper_phase_offset(int n_phases, long long k, int o_tau, int zeros, double *out);
/* Largest tapering-induced power gain of any undesired replica, dB. */
otma_status otma_worst_case_harmonic_gain_db(int n_phases, int o_tau, int i_max, double *out);

/* ----------------------------------------------------------------------- */
/* Waveforms and modulation                                                */
/* ----------------------------------------------------------------------- */

/* Deterministic band-limited test signal (unit power; see library docs). */
otma_status otma_waveform_make_test(const otma_tma_config *cfg, int n_symbols, uint64_t seed,
                                    int samples_per_slot, otma_waveform **out);
/* Same pipeline with an all-ones symbol stream. */
otma_status otma_waveform_make_constant(const otma_tma_config *cfg, int n_symbols,
                                        int samples_per_slot, otma_waveform **out);
/* Pointwise product with the (delayed, tapered) schedule waveform. */
otma_status otma_waveform_modulate(const otma_waveform *s, const otma_tma_config *cfg, int delay,
                                   int taper_zeros, otma_waveform **out);
void otma_waveform_free(otma_waveform *w);
otma_status otma_waveform_size(const otma_waveform *w, int64_t *out);
otma_status otma_waveform_rate(const otma_waveform *w, double *out);
otma_status otma_waveform_sample(const otma_waveform *w, int64_t idx, double *re, double *im);
otma_status otma_waveform_mean_power(const otma_waveform *w, double *out);
/* Power-spectrum CSV: freq_hz, psd_db. */
otma_status otma_waveform_write_spectrum_csv(const otma_waveform *w, const char *path);

/* Replicas predicted by the closed-form coefficients, |i| <= i_max. */
otma_status otma_replicas_predict(const otma_tma_config *cfg, int delay, int i_max,
                                  otma_replicas **out);
/* Complete replica set of the sampled schedule (exact reconstruction). */
otma_status otma_replicas_sampled(const otma_tma_config *cfg, int delay, int taper_zeros,
                                  int samples_per_slot, otma_replicas **out);
void otma_replicas_free(otma_replicas *rep);
otma_status otma_replicas_size(const otma_replicas *rep, int *out);
otma_status otma_replicas_entry(const otma_replicas *rep, int idx, long long *harmonic,
                                double *center_freq_hz, double *re, double *im);
/* Schedule-spectrum power fraction not covered by `rep`. */
otma_status otma_replicas_truncated_power(const otma_tma_config *cfg, int delay, int taper_zeros,
                                          int samples_per_slot, const otma_replicas *rep,
                                          double *out);
/* Relative L2 error between the spectrum of y and the replica-shifted sum of
 * the spectrum of s. */
otma_status otma_verify_replicas(const otma_waveform *y, const otma_replicas *predicted,
                                 const otma_waveform *s, double *out);
/* Replica table dump ({band_hz, replicas: [...]}) as JSON. */
otma_status otma_replicas_write_json(const otma_replicas *rep, const char *path);

/* ----------------------------------------------------------------------- */
/* Beamforming                                                             */
/* ----------------------------------------------------------------------- */

/* Delay-chain phase at antenna m for replica i under progressive delay d. */
otma_status otma_antenna_phase(const otma_tma_config *cfg, int antenna, long long harmonic,
                               int delay, double *out);
/* Array factor at theta_deg; mode 0 = simplified, 1 = exact (per-replica
 * frequency in the propagation term). */
otma_status otma_array_factor(const otma_array_config *acfg, const otma_tma_config *cfg,
                              double theta_deg, long long harmonic, int delay, int mode,
                              double *re, double *im);
/* Steered direction of replica i under delay d; *exists = 0 when the
 * steering argument leaves the visible region (then *out is unset). */
otma_status otma_beam_direction(const otma_tma_config *cfg, const otma_array_config *acfg,
                                long long harmonic, int delay, int *exists, double *out);

/* Array factor over a uniform angle grid on [-90, 90] for each of the
 * `n_harmonics` indices. Optional per-antenna arrays (length n_antennas):
 * taper_zeros replaces the uniform coefficient with each element's tapered
 * one; delay_override replaces the progressive m*d schedule shifts. Either
 * may be NULL. */
otma_status otma_beampattern_sweep(const otma_array_config *acfg, const otma_tma_config *cfg,
                                   int delay, const long long *harmonics, int n_harmonics,
                                   double grid_step_deg, const int *taper_zeros,
                                   const int *delay_override, int mode, otma_beampattern **out);
void otma_beampattern_free(otma_beampattern *bp);
otma_status otma_beampattern_n_angles(const otma_beampattern *bp, int *out);
otma_status otma_beampattern_angle(const otma_beampattern *bp, int idx, double *out);
otma_status otma_beampattern_n_harmonics(const otma_beampattern *bp, int *out);
otma_status otma_beampattern_harmonic(const otma_beampattern *bp, int row, long long *out);
otma_status otma_beampattern_value(const otma_beampattern *bp, int row, int angle_idx, double *re,
                                   double *im);
/* CSV with a `# <metadata_json>` first line, theta_deg column, then one
 * magnitude-dB column per (harmonic, delay) pair over all `n_patterns`
 * patterns (shared angle grid required). */
otma_status otma_beampattern_write_csv(const otma_beampattern *const *patterns, int n_patterns,
                                       const char *metadata_json, const char *path);

/* ----------------------------------------------------------------------- */
/* Verification                                                            */
/* ----------------------------------------------------------------------- */

/* Run the analytic-vs-oracle verification grid. samples_per_slot <= 0 picks
 * the default density. inject_fault != 0 perturbs one coefficient so the
 * grid check must fail (harness self-test). */
otma_status otma_verify_run(int samples_per_slot, int inject_fault, otma_verify_report **out);
void otma_verify_report_free(otma_verify_report *report);
otma_status otma_verify_report_size(const otma_verify_report *report, int *out);
otma_status otma_verify_report_passed(const otma_verify_report *report, int *out);
otma_status otma_verify_report_check(const otma_verify_report *report, int idx, const char **name,
                                     double *max_error, double *threshold, int *passed,
                                     const char **detail);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OTMA_H */
