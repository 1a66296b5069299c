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
#include "maqaoa/records.hpp"

#include <cstdio>

#include <json.hpp>

#include "maqaoa/errors.hpp"

namespace maqaoa {

namespace {

using nlohmann::json;

json identity_json(const RunIdentity &id) {
    return {
        {"run_id", id.run_id()},
        {"family", to_string(id.family)},
        {"n", id.n_qubits},
        {"p", id.depth},
        {"method", to_string(id.method)},
        {"w_max", id.w_max},
        {"threshold", id.threshold},
        {"instance", id.instance_index},
        {"instance_seed", id.instance_seed},
        {"init_id", id.init_id},
        {"init", id.init_label},
        {"run_seed", id.run_seed},
    };
}

RunIdentity identity_from_json(const json &j) {
    RunIdentity id;
    id.family = parse_family(j.at("family").get<std::string>());
    id.n_qubits = j.at("n").get<std::size_t>();
    id.depth = j.at("p").get<std::size_t>();
    id.method = parse_method(j.at("method").get<std::string>());
    id.w_max = j.at("w_max").get<std::size_t>();
    id.threshold = j.at("threshold").get<double>();
    id.instance_index = j.at("instance").get<std::size_t>();
    id.instance_seed = j.at("instance_seed").get<std::uint64_t>();
    id.init_id = j.at("init_id").get<int>();
    id.init_label = j.at("init").get<std::string>();
    id.run_seed = j.at("run_seed").get<std::uint64_t>();
    return id;
}

json summary_json(const RunSummary &s) {
    json j = identity_json(s.id);
    j["alpha_step0"] = s.alpha_step0;
    j["alpha_final"] = s.alpha_final;
    j["alpha_best"] = s.alpha_best;
    j["tau_099"] = s.tau_099;
    j["n_params"] = s.n_params;
    j["n_active_before"] = s.n_active_before;
    j["n_active"] = s.n_active;
    j["c_ballpark"] = s.c_ballpark;
    j["reduction_fraction"] = s.reduction_fraction;
    j["cost_angle_similarity"] =
        s.cost_angle_similarity ? json(*s.cost_angle_similarity) : json(nullptr);
    j["alpha_lwpp"] = s.alpha_lwpp ? json(*s.alpha_lwpp) : json(nullptr);
    j["energy_step0"] = s.energy_step0;
    j["energy_final"] = s.energy_final;
    j["degenerate"] = s.degenerate;
    return j;
}

std::optional<double> optional_double(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<double>();
}

} // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::ExactOnly:
        return "exact-only";
    case Method::SafeNoDistill:
        return "safe-no-distill";
    case Method::SafeDistill:
        return "safe-distill";
    }
    return "exact-only";
}

Method parse_method(std::string_view text) {
    if (text == "exact-only" || text == "exact") {
        return Method::ExactOnly;
    }
    if (text == "safe-no-distill" || text == "safe") {
        return Method::SafeNoDistill;
    }
    if (text == "safe-distill") {
        return Method::SafeDistill;
    }
    throw ParameterError("unknown method \"" + std::string(text) + "\"");
}

std::string RunIdentity::run_id() const {
    std::string id = std::string(to_string(family)) + "-n" + std::to_string(n_qubits) +
                     "-p" + std::to_string(depth) + "-i" + std::to_string(instance_index) +
                     "-init" + std::to_string(init_id) + "-" + std::string(to_string(method));
    if (method != Method::ExactOnly) {
        id += "-w" + std::to_string(w_max);
    }
    if (method == Method::SafeDistill) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "-t%g", threshold);
        id += buf;
    }
    return id;
}

std::string to_json_line(const RunSummary &s) { return summary_json(s).dump(); }

RunSummary summary_from_json(std::string_view line) {
    try {
        const json j = json::parse(line);
        RunSummary s;
        s.id = identity_from_json(j);
        s.alpha_step0 = j.at("alpha_step0").get<double>();
        s.alpha_final = j.at("alpha_final").get<double>();
        s.alpha_best = j.at("alpha_best").get<double>();
        s.tau_099 = j.at("tau_099").get<std::size_t>();
        s.n_params = j.at("n_params").get<std::size_t>();
        s.n_active_before = j.at("n_active_before").get<std::size_t>();
        s.n_active = j.at("n_active").get<std::size_t>();
        s.c_ballpark = j.at("c_ballpark").get<double>();
        s.reduction_fraction = j.at("reduction_fraction").get<double>();
        s.cost_angle_similarity = optional_double(j, "cost_angle_similarity");
        s.alpha_lwpp = optional_double(j, "alpha_lwpp");
        s.energy_step0 = j.at("energy_step0").get<double>();
        s.energy_final = j.at("energy_final").get<double>();
        s.degenerate = j.at("degenerate").get<bool>();
        return s;
    } catch (const json::exception &ex) {
        throw ParseError(std::string("run summary: ") + ex.what());
    }
}

std::string to_json_line(const RunFailure &f) {
    json j = identity_json(f.id);
    j["error"] = f.message;
    return j.dump();
}

std::string to_jsonl(const TrajectoryRecord &rec, const RunSummary &s) {
    std::string out;
    json meta = identity_json(rec.id);
    meta["type"] = "meta";
    meta["pretrain_steps"] = rec.pretrain_steps;
    meta["finetune_steps"] = rec.finetune_steps;
    meta["learning_rate"] = rec.learning_rate;
    meta["adam_betas"] = {0.9, 0.999};
    meta["adam_reset_between_stages"] = true;
    meta["cost_angle_convention"] = "exp(-i*angle*P), coefficient absorbed";
    meta["n_params"] = rec.n_params;
    meta["n_active_before"] = rec.n_active_before;
    meta["n_active_after"] = rec.n_active_after;
    meta["reduction_fraction"] = rec.reduction_fraction;
    meta["degenerate"] = rec.degenerate;
    meta["surrogate_energies"] = rec.surrogate_energies;
    out += meta.dump();
    out += '\n';
    for (std::size_t t = 0; t < rec.exact.size(); ++t) {
        json row{{"type", "step"},
                 {"step", t},
                 {"energy", rec.exact[t].energy},
                 {"alpha", rec.exact[t].alpha}};
        out += row.dump();
        out += '\n';
    }
    json summary = summary_json(s);
    summary["type"] = "summary";
    out += summary.dump();
    out += '\n';
    return out;
}

} // namespace maqaoa
