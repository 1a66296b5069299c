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
#include "maqaoa/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "maqaoa/cli/verify.hpp"
#include "maqaoa/errors.hpp"
#include "maqaoa/metrics.hpp"
#include "maqaoa/sweep.hpp"

namespace maqaoa::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void write_file(const fs::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            throw Error("cannot create directory " + path.parent_path().string() + ": " +
                        ec.message());
        }
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << content;
    os.flush();
    if (!os) {
        throw Error("cannot write " + path.string());
    }
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProblemInstance load_or_generate(const ExperimentConfig &cfg, Family family, std::size_t n,
                                 std::size_t index, std::uint64_t seed) {
    const fs::path path = instance_path(cfg.output_dir, family, n, index);
    if (fs::exists(path)) {
        ProblemInstance inst = instance_from_json(read_file(path));
        if (inst.family != family || inst.n_qubits != n || inst.seed != seed) {
            throw InvalidInstanceError(path.string() +
                                       " does not match the configured family, size or seed");
        }
        return inst.extremes ? inst : with_extremes(std::move(inst));
    }
    ProblemInstance inst = default_instance(family, n, seed, cfg.sweep.maxcut_edge_probability);
    write_file(path, to_json(inst));
    return inst;
}

} // namespace

fs::path instance_path(const fs::path &out, Family family, std::size_t n, std::size_t index) {
    return out / "instances" /
           (std::string(to_string(family)) + "-n" + std::to_string(n) + "-i" +
            std::to_string(index) + ".json");
}

fs::path run_dir(const fs::path &out, const RunIdentity &id) {
    return out / "results" / std::string(to_string(id.family)) / std::to_string(id.n_qubits) /
           std::to_string(id.depth) / std::string(to_string(id.method));
}

int cmd_generate(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        std::size_t written = 0;
        for (auto family : cfg.sweep.families) {
            for (auto n : cfg.sweep.sizes) {
                for (std::size_t i = 0; i < cfg.sweep.instances; ++i) {
                    const auto seed = instance_seed(cfg.sweep.master_seed, family, n, i);
                    const ProblemInstance inst =
                        default_instance(family, n, seed, cfg.sweep.maxcut_edge_probability);
                    const fs::path path = instance_path(cfg.output_dir, family, n, i);
                    write_file(path, to_json(inst));
                    out << path.string() << '\n';
                    ++written;
                }
            }
        }
        out << written << " instance files\n";
        return kExitClean;
    } catch (const std::exception &e) {
        err << "generate: " << e.what() << '\n';
        return kExitFailed;
    }
}

int cmd_run(const ExperimentConfig &cfg, bool dry_run, std::ostream &out, std::ostream &err,
            const std::atomic<bool> *cancel) {
    const std::vector<RunIdentity> plan = plan_runs(cfg.sweep);
    if (dry_run) {
        for (const auto &id : plan) {
            out << id.run_id() << '\n';
        }
        out << plan.size() << " runs planned\n";
        return kExitClean;
    }
    try {
        std::error_code ec;
        fs::create_directories(cfg.output_dir, ec);
        if (ec) {
            throw Error("cannot create output directory " + cfg.output_dir.string() + ": " +
                        ec.message());
        }
        write_file(cfg.output_dir / "config.json", to_json(cfg));
    } catch (const std::exception &e) {
        err << "run: " << e.what() << '\n';
        return kExitFailed;
    }

    std::size_t finished = 0;
    auto sink = [&](const TrajectoryRecord &rec, const RunSummary &s) {
        const fs::path dir = run_dir(cfg.output_dir, rec.id);
        const std::string stem = rec.id.run_id();
        write_file(dir / (stem + ".jsonl"), to_jsonl(rec, s));
        if (rec.pretrained) {
            write_file(dir / (stem + ".pretrained.json"), to_json(*rec.pretrained));
        }
        if (rec.distilled) {
            write_file(dir / (stem + ".distilled.json"), to_json(*rec.distilled));
        }
        if (rec.final_params) {
            write_file(dir / (stem + ".final.json"), to_json(*rec.final_params));
        }
        ++finished;
        char line[64];
        std::snprintf(line, sizeof(line), " alpha %.4f -> %.4f tau %zu", s.alpha_step0,
                      s.alpha_final, s.tau_099);
        out << '[' << finished << '/' << plan.size() << "] " << stem << line << std::endl;
    };
    auto on_failure = [&](const RunFailure &f) {
        ++finished;
        err << '[' << finished << '/' << plan.size() << "] FAILED " << f.id.run_id() << ": "
            << f.message << std::endl;
    };
    auto provider = [&](Family family, std::size_t n, std::size_t index, std::uint64_t seed) {
        return load_or_generate(cfg, family, n, index, seed);
    };

    const SweepResult result = run_sweep(cfg.sweep, provider, sink, on_failure, cancel);

    try {
        std::string runs;
        for (const auto &s : result.summaries) {
            runs += to_json_line(s) + "\n";
        }
        write_file(cfg.output_dir / "runs.jsonl", runs);
        std::ostringstream csv;
        write_summary_csv(csv, result.summaries);
        write_file(cfg.output_dir / "summary.csv", csv.str());
        std::string failures;
        for (const auto &f : result.failures) {
            failures += to_json_line(f) + "\n";
        }
        write_file(cfg.output_dir / "failures.jsonl", failures);
    } catch (const std::exception &e) {
        err << "run: " << e.what() << '\n';
        return kExitFailed;
    }

    out << result.summaries.size() << " runs completed, " << result.failures.size()
        << " failed";
    if (result.cancelled) {
        out << ", cancelled";
    }
    out << '\n';
    if (!result.failures.empty() && result.summaries.empty()) {
        return kExitFailed;
    }
    return result.failures.empty() && !result.cancelled ? kExitClean : kExitPartial;
}

std::vector<RunSummary> collect_summaries(const fs::path &dir, std::ostream &err) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RunSummary> out;
    for (const auto &path : files) {
        std::istringstream in(read_file(path));
        std::string line;
        std::string last;
        while (std::getline(in, line)) {
            if (!line.empty()) {
                last = line;
            }
        }
        try {
            const auto j = nlohmann::json::parse(last);
            if (!j.is_object() || j.value("type", "") != "summary") {
                continue;
            }
            out.push_back(summary_from_json(last));
        } catch (const std::exception &e) {
            err << "warning: skipping " << path.string() << ": " << e.what() << '\n';
        }
    }
    return out;
}

int cmd_report(const fs::path &dir, std::ostream &out, std::ostream &err) {
    try {
        if (!fs::is_directory(dir)) {
            throw Error("results directory " + dir.string() + " does not exist");
        }
        const fs::path root = fs::is_directory(dir / "results") ? dir / "results" : dir;
        const std::vector<RunSummary> summaries = collect_summaries(root, err);
        if (summaries.empty()) {
            err << "warning: no run summaries under " << root.string() << '\n';
        }
        const std::vector<CellAggregate> cells = aggregate(summaries);
        const fs::path report = dir / "report";

        std::set<std::tuple<Family, std::size_t, std::size_t>> settings;
        std::set<std::size_t> ws;
        std::set<double> ts;
        std::set<std::pair<std::size_t, double>> distill_keys;
        std::set<CellKey> present;
        for (const auto &c : cells) {
            present.insert(c.key);
            settings.insert({c.key.family, c.key.n_qubits, c.key.depth});
            if (c.key.method != Method::ExactOnly) {
                ws.insert(c.key.w_max);
            }
            if (c.key.method == Method::SafeDistill) {
                ts.insert(c.key.threshold);
                distill_keys.insert({c.key.w_max, c.key.threshold});
            }
        }
        for (const auto &[family, n, p] : settings) {
            auto check = [&](const CellKey &k) {
                if (present.count(k) == 0) {
                    err << "warning: missing cell " << to_string(k.family) << " n=" << n
                        << " p=" << p << ' ' << to_string(k.method);
                    if (k.method != Method::ExactOnly) {
                        err << " w_max=" << k.w_max;
                    }
                    if (k.method == Method::SafeDistill) {
                        err << " threshold=" << num(k.threshold);
                    }
                    err << '\n';
                }
            };
            check({family, n, p, Method::ExactOnly, 0, 0.0});
            for (auto w : ws) {
                check({family, n, p, Method::SafeNoDistill, w, 0.0});
                for (auto t : ts) {
                    check({family, n, p, Method::SafeDistill, w, t});
                }
            }
        }

        std::ostringstream cells_csv;
        write_cells_csv(cells_csv, cells);
        write_file(report / "cells.csv", cells_csv.str());
        std::ostringstream thresholds_csv;
        write_threshold_summary(thresholds_csv, cells);
        write_file(report / "threshold_summary.csv", thresholds_csv.str());
        std::ostringstream summary_csv;
        write_summary_csv(summary_csv, summaries);
        write_file(report / "summary.csv", summary_csv.str());
        for (const auto &[w, t] : distill_keys) {
            const std::string suffix = "_w" + std::to_string(w) + "_t" + num(t) + ".csv";
            std::ostringstream progression;
            write_table_progression(progression, cells, w, t);
            write_file(report / ("table_progression" + suffix), progression.str());
            std::ostringstream cost;
            write_table_cost(cost, cells, w, t);
            write_file(report / ("table_cost" + suffix), cost.str());
            std::ostringstream reductions;
            write_reductions_csv(reductions, reduction_stats(cells, w, t));
            write_file(report / ("reductions" + suffix), reductions.str());
        }
        out << summaries.size() << " runs in " << cells.size() << " cells, report written to "
            << report.string() << '\n';
        return kExitClean;
    } catch (const std::exception &e) {
        err << "report: " << e.what() << '\n';
        return kExitFailed;
    }
}

int cmd_verify(std::uint64_t seed, std::size_t pairs, std::ostream &out) {
    const CheckResult checks[] = {
        check_oracle_equivalence(seed, pairs),
        check_gradients(Engine::Surrogate, seed),
        check_gradients(Engine::Exact, seed),
    };
    bool ok = true;
    for (const auto &c : checks) {
        out << format(c) << '\n';
        ok = ok && c.passed;
    }
    return ok ? kExitClean : kExitPartial;
}

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err,
            const std::atomic<bool> *cancel) {
    CLI::App app{"Multi-angle QAOA with low-weight Pauli propagation pre-training"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    std::vector<std::string> families;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> depths;
    std::vector<std::size_t> w_max;
    std::vector<double> thresholds;
    std::vector<std::string> methods;
    std::vector<int> inits;
    std::size_t instances = 0;
    std::uint64_t seed = 0;
    std::size_t pretrain = 0;
    std::size_t finetune = 0;
    std::size_t workers = 0;
    double lr = 0.0;
    bool dry_run = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("-c,--config", config_path, "JSON experiment config")
            ->check(CLI::ExistingFile);
        cmd->add_option("-o,--out", output_dir, "Output directory");
        cmd->add_option("--family", families, "sk, grid or maxcut (repeatable)");
        cmd->add_option("--n", sizes, "Qubit counts");
        cmd->add_option("--instances", instances, "Instances per family and size");
        cmd->add_option("--seed", seed, "Master seed");
    };

    auto *gen = app.add_subcommand("generate", "Write instance files with cached extremes");
    add_common(gen);

    auto *run = app.add_subcommand("run", "Execute the experiment matrix");
    add_common(run);
    run->add_option("--p", depths, "Circuit depths");
    run->add_option("--wmax", w_max, "Truncation weights");
    run->add_option("--threshold", thresholds, "Distillation thresholds");
    run->add_option("--method", methods, "exact-only, safe-no-distill, safe-distill");
    run->add_option("--inits", inits, "Initialisation ids 0..10");
    run->add_option("--pretrain-steps", pretrain, "Surrogate Adam steps");
    run->add_option("--finetune-steps", finetune, "Exact Adam steps");
    run->add_option("--lr", lr, "Adam learning rate");
    run->add_option("-j,--workers", workers, "Worker threads, 0 = logical cores");
    run->add_flag("--dry-run", dry_run, "Print the planned runs and exit");

    std::string report_dir;
    auto *report = app.add_subcommand("report", "Aggregate results into tables");
    report->add_option("dir", report_dir, "Output directory of a previous run")->required();

    std::uint64_t verify_seed = 7;
    std::size_t pairs = 20;
    auto *verify = app.add_subcommand("verify", "Engine equivalence and gradient checks");
    verify->add_option("--seed", verify_seed, "Seed of the random cases");
    verify->add_option("--pairs", pairs, "Cases per family and size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitClean : kExitInvalidConfig;
    }

    if (report->parsed()) {
        return cmd_report(report_dir, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify(verify_seed, pairs, out);
    }

    ExperimentConfig cfg;
    try {
        cfg = config_path.empty() ? default_config() : load_config(config_path);
        CLI::App *cmd = gen->parsed() ? gen : run;
        auto given = [cmd](const char *name) { return cmd->count(name) > 0; };
        auto &s = cfg.sweep;
        if (given("--out")) {
            cfg.output_dir = output_dir;
        }
        if (given("--family")) {
            s.families.clear();
            for (const auto &f : families) {
                s.families.push_back(parse_family(f));
            }
        }
        if (given("--n")) {
            s.sizes = sizes;
        }
        if (given("--instances")) {
            s.instances = instances;
        }
        if (given("--seed")) {
            s.master_seed = seed;
        }
        if (cmd == run) {
            if (given("--p")) {
                s.depths = depths;
            }
            if (given("--wmax")) {
                s.w_max_set = w_max;
            }
            if (given("--threshold")) {
                s.thresholds = thresholds;
            }
            if (given("--method")) {
                s.methods.clear();
                for (const auto &m : methods) {
                    s.methods.push_back(parse_method(m));
                }
            }
            if (given("--inits")) {
                cfg.init_ids = inits;
            }
            if (given("--pretrain-steps")) {
                s.pretrain_steps = pretrain;
            }
            if (given("--finetune-steps")) {
                s.finetune_steps = finetune;
            }
            if (given("--lr")) {
                s.adam.learning_rate = lr;
            }
            if (given("--workers")) {
                cfg.workers = workers;
            }
        }
        cfg.finalize();
        if (cmd == run) {
            (void)plan_runs(cfg.sweep);
        }
    } catch (const Error &e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    if (gen->parsed()) {
        return cmd_generate(cfg, out, err);
    }
    return cmd_run(cfg, dry_run, out, err, cancel);
}

} // namespace maqaoa::cli
