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

#include "otma/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "otma/dft.hpp"
#include "otma/errors.hpp"

namespace otma
{

std::string format_sig(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

static std::ofstream open_out(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw_error(error_code::io_error, "cannot open \"" + path + "\" for writing");
    return out;
}

void write_schedule_csv(const std::string &path, const switch_schedule &sched,
                        int samples_per_slot)
{
    if (samples_per_slot < 1)
        throw_error(error_code::non_positive_parameter,
                    "write_schedule_csv: samples_per_slot must be >= 1");
    std::ofstream out = open_out(path);
    out << "slot_index,time_s,state_index,phase_rad,re,im\n";
    for (std::size_t idx = 0; idx < sched.slots.size(); idx++)
    {
        int state = sched.slots[idx];
        double phase = (state == off_slot) ? 0.0 : state_phase(sched.n_phases, state);
        cdouble v = (state == off_slot) ? cdouble{0.0, 0.0} : cis(phase);
        for (int r = 0; r < samples_per_slot; r++)
        {
            double t = (static_cast<double>(idx) +
                        static_cast<double>(r) / static_cast<double>(samples_per_slot)) *
                       sched.slot_duration;
            out << idx << ',' << format_sig(t) << ',' << state << ',' << format_sig(phase) << ','
                << format_sig(v.real()) << ',' << format_sig(v.imag()) << '\n';
        }
    }
    if (!out)
        throw_error(error_code::io_error, "write failed for \"" + path + "\"");
}

void write_beampattern_csv(const std::string &path, const std::vector<beam_pattern> &patterns,
                           const std::string &metadata_json)
{
    if (patterns.empty())
        throw_error(error_code::invalid_argument, "write_beampattern_csv: no patterns");
    const std::vector<double> &angles = patterns.front().angles_deg;
    for (const beam_pattern &p : patterns)
        if (p.angles_deg != angles)
            throw_error(error_code::invalid_grid,
                        "write_beampattern_csv: patterns must share one angle grid");

    std::ofstream out = open_out(path);
    out << "# " << metadata_json << '\n';
    out << "theta_deg";
    for (const beam_pattern &p : patterns)
        for (long long i : p.harmonics)
            out << ",mag_db_i" << i << "_d" << p.delay;
    out << '\n';

    for (std::size_t g = 0; g < angles.size(); g++)
    {
        out << format_sig(angles[g]);
        for (const beam_pattern &p : patterns)
            for (std::size_t row = 0; row < p.values.size(); row++)
            {
                double mag2 = std::norm(p.values[row][g]);
                double db = mag2 > 0.0 ? pow2db(mag2) : -std::numeric_limits<double>::infinity();
                // Clamp the log of exact nulls to a finite floor so the CSV
                // stays parseable everywhere.
                if (db < -300.0)
                    db = -300.0;
                out << ',' << format_sig(db);
            }
        out << '\n';
    }
    if (!out)
        throw_error(error_code::io_error, "write failed for \"" + path + "\"");
}

void write_spectrum_csv(const std::string &path, const sampled_waveform &w)
{
    if (w.samples.empty())
        throw_error(error_code::invalid_argument, "write_spectrum_csv: empty waveform");
    std::vector<cdouble> spec = dft(w.samples);
    const long long total = static_cast<long long>(spec.size());
    const double scale = 1.0 / static_cast<double>(total);

    std::ofstream out = open_out(path);
    out << "freq_hz,psd_db\n";
    for (long long b = -(total / 2) + (total % 2 == 0 ? 1 : 0); b <= total / 2; b++)
    {
        double freq = static_cast<double>(b) * w.rate / static_cast<double>(total);
        double p = std::norm(spec[static_cast<std::size_t>(mod_floor(b, total))] * scale);
        double db = p > 0.0 ? pow2db(p) : -std::numeric_limits<double>::infinity();
        if (db < -300.0)
            db = -300.0;
        out << format_sig(freq) << ',' << format_sig(db) << '\n';
    }
    if (!out)
        throw_error(error_code::io_error, "write failed for \"" + path + "\"");
}

void write_replicas_json(const std::string &path, const replica_spectrum &rep)
{
    nlohmann::json root;
    root["band_hz"] = rep.band_hz;
    root["replicas"] = nlohmann::json::array();
    for (const replica_entry &e : rep.entries)
        root["replicas"].push_back({{"harmonic", e.harmonic},
                                    {"center_freq_hz", e.center_freq_hz},
                                    {"weight_re", e.weight.real()},
                                    {"weight_im", e.weight.imag()}});
    std::ofstream out = open_out(path);
    out << root.dump(2) << '\n';
    if (!out)
        throw_error(error_code::io_error, "write failed for \"" + path + "\"");
}

// ---------------------------------------------------------------------------
// SVG plotting
// ---------------------------------------------------------------------------

static const char *series_color(std::size_t idx)
{
    static const char *palette[] = {"#376795", "#e76254", "#72bcd5", "#ffd06f",
                                    "#528fad", "#ef8a47", "#aadce0", "#f7aa58"};
    return palette[idx % (sizeof(palette) / sizeof(palette[0]))];
}

void write_svg_plot(const std::string &path, const std::string &title,
                    const std::string &x_label, const std::string &y_label,
                    const std::vector<plot_series> &series)
{
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const plot_series &s : series)
        for (std::size_t p = 0; p < s.x.size(); p++)
        {
            if (!std::isfinite(s.x[p]) || !std::isfinite(s.y[p]))
                continue;
            x_lo = std::min(x_lo, s.x[p]), x_hi = std::max(x_hi, s.x[p]);
            y_lo = std::min(y_lo, s.y[p]), y_hi = std::max(y_hi, s.y[p]);
        }
    if (!(x_hi > x_lo))
        x_hi = x_lo + 1.0;
    if (!(y_hi > y_lo))
        y_hi = y_lo + 1.0;

    const double width = 760.0, height = 480.0;
    const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 55.0;
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb); };

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << height / 2
        << ")\">" << y_label << "</text>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
        << "\" height=\"" << height - mt - mb << "\" fill=\"none\" stroke=\"#444\"/>\n";

    for (int tick = 0; tick <= 4; tick++)
    {
        double fx = x_lo + (x_hi - x_lo) * tick / 4.0;
        double fy = y_lo + (y_hi - y_lo) * tick / 4.0;
        out << "<text x=\"" << px(fx) << "\" y=\"" << height - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << format_sig(fx) << "</text>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(fy) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << format_sig(fy) << "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); si++)
    {
        const plot_series &s = series[si];
        out << "<polyline fill=\"none\" stroke=\"" << series_color(si)
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < s.x.size(); p++)
        {
            if (!std::isfinite(s.x[p]) || !std::isfinite(s.y[p]))
                continue;
            out << px(s.x[p]) << ',' << py(s.y[p]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 8 << "\" y=\"" << mt + 16 + 16 * static_cast<double>(si)
            << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << series_color(si) << "\">"
            << s.label << "</text>\n";
    }
    out << "</svg>\n";
    if (!out)
        throw_error(error_code::io_error, "write failed for \"" + path + "\"");
}

} // namespace otma
