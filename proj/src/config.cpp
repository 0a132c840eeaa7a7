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

#include "otma/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "otma/errors.hpp"

namespace otma
{

using nlohmann::json;

const tma_config &validate(const tma_config &cfg)
{
    if (cfg.n_phases < 2)
        throw_error(error_code::phase_count_too_small,
                    "tma_config: n_phases must be >= 2, got " + std::to_string(cfg.n_phases));
    if (cfg.o_f < 1)
        throw_error(error_code::non_positive_parameter,
                    "tma_config: o_f must be >= 1, got " + std::to_string(cfg.o_f));
    if (cfg.o_tau < 1)
        throw_error(error_code::non_positive_parameter,
                    "tma_config: o_tau must be >= 1, got " + std::to_string(cfg.o_tau));
    if (!(cfg.sample_rate > 0.0))
        throw_error(error_code::non_positive_parameter, "tma_config: sample_rate must be > 0");
    return cfg;
}

const array_config &validate(const array_config &cfg)
{
    if (cfg.n_antennas < 1)
        throw_error(error_code::non_positive_parameter,
                    "array_config: n_antennas must be >= 1, got " + std::to_string(cfg.n_antennas));
    if (!(cfg.spacing_wl > 0.0))
        throw_error(error_code::non_positive_parameter, "array_config: spacing_wl must be > 0");
    if (!(cfg.carrier_freq > 0.0))
        throw_error(error_code::non_positive_parameter, "array_config: carrier_freq must be > 0");
    return cfg;
}

static void reject_unknown_keys(const json &obj, std::initializer_list<const char *> known,
                                const char *where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
    {
        bool ok = false;
        for (const char *k : known)
            if (it.key() == k)
                ok = true;
        if (!ok)
            throw_error(error_code::json_error,
                        std::string("config: unknown key \"") + it.key() + "\" in " + where);
    }
}

static int get_int(const json &obj, const char *key, int fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number_integer())
        throw_error(error_code::json_error, std::string("config: \"") + key + "\" must be an integer");
    return v.get<int>();
}

static double get_num(const json &obj, const char *key, double fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number())
        throw_error(error_code::json_error, std::string("config: \"") + key + "\" must be a number");
    return v.get<double>();
}

loaded_config config_from_json(const std::string &json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw_error(error_code::json_error, std::string("config: JSON parse failed: ") + e.what());
    }
    if (!root.is_object())
        throw_error(error_code::json_error, "config: top-level JSON value must be an object");

    reject_unknown_keys(root, {"n_phases", "o_f", "o_tau", "sample_rate", "array"}, "top level");

    loaded_config out;
    out.tma.n_phases = get_int(root, "n_phases", out.tma.n_phases);
    out.tma.o_f = get_int(root, "o_f", out.tma.o_f);
    out.tma.o_tau = get_int(root, "o_tau", out.tma.o_tau);
    out.tma.sample_rate = get_num(root, "sample_rate", out.tma.sample_rate);
    validate(out.tma);

    if (root.contains("array"))
    {
        const json &a = root.at("array");
        if (!a.is_object())
            throw_error(error_code::json_error, "config: \"array\" must be an object");
        reject_unknown_keys(a, {"n_antennas", "spacing_wl", "carrier_freq"}, "\"array\"");
        array_config ac;
        ac.n_antennas = get_int(a, "n_antennas", ac.n_antennas);
        ac.spacing_wl = get_num(a, "spacing_wl", ac.spacing_wl);
        ac.carrier_freq = get_num(a, "carrier_freq", ac.carrier_freq);
        validate(ac);
        out.array = ac;
    }
    return out;
}

loaded_config config_from_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw_error(error_code::io_error, "config: cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

std::string config_to_json(const tma_config &cfg, const std::optional<array_config> &array)
{
    json root;
    root["n_phases"] = cfg.n_phases;
    root["o_f"] = cfg.o_f;
    root["o_tau"] = cfg.o_tau;
    root["sample_rate"] = cfg.sample_rate;
    if (array)
    {
        root["array"] = {{"n_antennas", array->n_antennas},
                         {"spacing_wl", array->spacing_wl},
                         {"carrier_freq", array->carrier_freq}};
    }
    return root.dump(2);
}

} // namespace otma
