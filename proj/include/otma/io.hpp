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

#pragma once

#include <string>
#include <vector>

#include "beamformer.hpp"
#include "modseq.hpp"
#include "modulator.hpp"
#include "waveform.hpp"

namespace otma
{

// Fixed numeric formatting for all CSV output: 12 significant digits,
// period decimal separator, locale-independent.
std::string format_sig(double v);

// Schedule dump: slot_index, time_s, state_index (-1 for OFF), phase_rad,
// re, im. With samples_per_slot > 1 each slot is emitted that many times
// with time_s advancing inside the slot.
void write_schedule_csv(const std::string &path, const switch_schedule &sched,
                        int samples_per_slot = 1);

// Beam patterns: theta_deg column, then one magnitude-dB column per
// (harmonic, delay) pair across all given patterns. First line is a `#`
// comment holding JSON metadata (config echo). All patterns must share the
// same angle grid.
void write_beampattern_csv(const std::string &path, const std::vector<beam_pattern> &patterns,
                           const std::string &metadata_json);

// Power spectrum of a waveform: freq_hz, psd_db rows, ascending frequency
// over (-rate/2, rate/2].
void write_spectrum_csv(const std::string &path, const sampled_waveform &w);

// Replica table as JSON: band plus per-entry {harmonic, center_freq_hz,
// weight_re, weight_im}.
void write_replicas_json(const std::string &path, const replica_spectrum &rep);

// Minimal multi-series SVG line plot (decorative output; never compared
// against golden files).
struct plot_series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};
void write_svg_plot(const std::string &path, const std::string &title,
                    const std::string &x_label, const std::string &y_label,
                    const std::vector<plot_series> &series);

} // namespace otma
