// Copyright 2026 The maqaoa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "maqaoa/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "maqaoa/errors.hpp"

namespace maqaoa::cli {

using json = nlohmann::json;

namespace {

const std::set<std::string> kKeys{
    "families",      "sizes",          "depths",         "w_max",
    "thresholds",    "methods",        "instances",      "inits",
    "relax_steps",   "master_seed",    "pretrain_steps", "finetune_steps",
    "learning_rate", "beta1",          "beta2",          "epsilon",
    "maxcut_edge_probability",         "output_dir",     "workers"};

template <typename T>
void read(const json &j, const char *key, T &out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

} // namespace

void ExperimentConfig::finalize() {
    const auto roster = standard_init_roster(relax_steps);
    sweep.inits.clear();
    for (int id : init_ids) {
        auto it = std::find_if(roster.begin(), roster.end(),
                               [id](const InitSpec &s) { return s.id == id; });
        if (it == roster.end()) {
            throw ParseError("unknown init id " + std::to_string(id));
        }
        sweep.inits.push_back(*it);
    }
    sweep.workers = workers != 0 ? workers
                                 : std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    cfg.finalize();
    return cfg;
}

ExperimentConfig config_from_json(std::string_view text) {
    ExperimentConfig cfg;
    try {
        const json j = json::parse(text);
        if (!j.is_object()) {
            throw ParseError("config must be a JSON object");
        }
        for (const auto &item : j.items()) {
            if (kKeys.count(item.key()) == 0) {
                throw ParseError("unknown config key '" + item.key() + "'");
            }
        }
        auto &s = cfg.sweep;
        if (j.contains("families")) {
            s.families.clear();
            for (const auto &f : j.at("families")) {
                s.families.push_back(parse_family(f.get<std::string>()));
            }
        }
        if (j.contains("methods")) {
            s.methods.clear();
            for (const auto &m : j.at("methods")) {
                s.methods.push_back(parse_method(m.get<std::string>()));
            }
        }
        read(j, "sizes", s.sizes);
        read(j, "depths", s.depths);
        read(j, "w_max", s.w_max_set);
        read(j, "thresholds", s.thresholds);
        read(j, "instances", s.instances);
        read(j, "inits", cfg.init_ids);
        read(j, "relax_steps", cfg.relax_steps);
        read(j, "master_seed", s.master_seed);
        read(j, "pretrain_steps", s.pretrain_steps);
        read(j, "finetune_steps", s.finetune_steps);
        read(j, "learning_rate", s.adam.learning_rate);
        read(j, "beta1", s.adam.beta1);
        read(j, "beta2", s.adam.beta2);
        read(j, "epsilon", s.adam.epsilon);
        read(j, "maxcut_edge_probability", s.maxcut_edge_probability);
        read(j, "workers", cfg.workers);
        if (j.contains("output_dir")) {
            cfg.output_dir = j.at("output_dir").get<std::string>();
        }
    } catch (const json::exception &ex) {
        throw ParseError(std::string("config: ") + ex.what());
    }
    cfg.finalize();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
}

std::string to_json(const ExperimentConfig &cfg) {
    const auto &s = cfg.sweep;
    json j;
    j["families"] = json::array();
    for (auto f : s.families) {
        j["families"].push_back(std::string(to_string(f)));
    }
    j["sizes"] = s.sizes;
    j["depths"] = s.depths;
    j["w_max"] = s.w_max_set;
    j["thresholds"] = s.thresholds;
    j["methods"] = json::array();
    for (auto m : s.methods) {
        j["methods"].push_back(std::string(to_string(m)));
    }
    j["instances"] = s.instances;
    j["inits"] = cfg.init_ids;
    j["relax_steps"] = cfg.relax_steps;
    j["master_seed"] = s.master_seed;
    j["pretrain_steps"] = s.pretrain_steps;
    j["finetune_steps"] = s.finetune_steps;
    j["learning_rate"] = s.adam.learning_rate;
    j["beta1"] = s.adam.beta1;
    j["beta2"] = s.adam.beta2;
    j["epsilon"] = s.adam.epsilon;
    j["maxcut_edge_probability"] = s.maxcut_edge_probability;
    j["output_dir"] = cfg.output_dir.string();
    j["workers"] = cfg.workers;
    return j.dump(2) + "\n";
}

} // namespace maqaoa::cli
