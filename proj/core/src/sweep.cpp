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
#include "maqaoa/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>

#include "maqaoa/errors.hpp"
#include "maqaoa/exact.hpp"
#include "maqaoa/metrics.hpp"
#include "maqaoa/rng.hpp"
#include "maqaoa/surrogate.hpp"

namespace maqaoa {

namespace {

std::uint64_t family_word(Family f) { return static_cast<std::uint64_t>(f) + 1; }

/// One unit of work: every run that shares an instance, depth, init and
/// (for SAFE runs) w_max.
struct Job {
    Family family;
    std::size_t n;
    std::size_t depth;
    std::size_t instance_index;
    std::size_t init_pos;
    std::optional<std::size_t> w_max;
    /// Indices into the plan.
    std::vector<std::size_t> runs;
};

bool has(const std::vector<Method> &methods, Method m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void check_spec(const SweepSpec &spec) {
    for (auto n : spec.sizes) {
        if (n < kMinInstanceQubits || n > kMaxInstanceQubits) {
            throw ParameterError("instance size out of range");
        }
    }
    for (auto p : spec.depths) {
        if (p == 0) {
            throw ParameterError("depth must be positive");
        }
    }
    for (auto t : spec.thresholds) {
        if (!(t >= 0.0)) {
            throw ParameterError("thresholds must be non-negative");
        }
    }
}

std::vector<Job> plan_jobs(const SweepSpec &spec, std::vector<RunIdentity> &plan) {
    check_spec(spec);
    std::vector<Job> jobs;
    const bool exact = has(spec.methods, Method::ExactOnly);
    const bool nodist = has(spec.methods, Method::SafeNoDistill);
    const bool dist = has(spec.methods, Method::SafeDistill) && !spec.thresholds.empty();
    for (auto family : spec.families) {
        for (auto n : spec.sizes) {
            for (auto p : spec.depths) {
                for (std::size_t i = 0; i < spec.instances; ++i) {
                    const auto iseed = instance_seed(spec.master_seed, family, n, i);
                    for (std::size_t k = 0; k < spec.inits.size(); ++k) {
                        const auto &init = spec.inits[k];
                        RunIdentity base;
                        base.family = family;
                        base.n_qubits = n;
                        base.depth = p;
                        base.instance_index = i;
                        base.instance_seed = iseed;
                        base.init_id = init.id;
                        base.init_label = init.label();
                        auto push = [&](Job &job, Method m, std::size_t w, double t) {
                            RunIdentity id = base;
                            id.method = m;
                            id.w_max = w;
                            id.threshold = t;
                            id.run_seed = run_seed(spec.master_seed, id);
                            job.runs.push_back(plan.size());
                            plan.push_back(std::move(id));
                        };
                        if (exact) {
                            Job job{family, n, p, i, k, std::nullopt, {}};
                            push(job, Method::ExactOnly, 0, 0.0);
                            jobs.push_back(std::move(job));
                        }
                        if (!nodist && !dist) {
                            continue;
                        }
                        for (auto w : spec.w_max_set) {
                            Job job{family, n, p, i, k, w, {}};
                            if (nodist) {
                                push(job, Method::SafeNoDistill, w, 0.0);
                            }
                            if (dist) {
                                for (auto t : spec.thresholds) {
                                    push(job, Method::SafeDistill, w, t);
                                }
                            }
                            jobs.push_back(std::move(job));
                        }
                    }
                }
            }
        }
    }
    return jobs;
}

} // namespace

std::uint64_t instance_seed(std::uint64_t master, Family family, std::size_t n,
                            std::size_t instance_index) {
    return derive_seed({master, family_word(family), n}) + instance_index;
}

std::uint64_t init_seed(std::uint64_t master, Family family, std::size_t n, std::size_t depth,
                        std::size_t instance_index, int init_id) {
    return derive_seed({master, family_word(family), n, depth, instance_index,
                        static_cast<std::uint64_t>(init_id)});
}

std::uint64_t run_seed(std::uint64_t master, const RunIdentity &id) {
    return derive_seed({master, family_word(id.family), id.n_qubits, id.depth,
                        id.instance_index, static_cast<std::uint64_t>(id.init_id),
                        static_cast<std::uint64_t>(id.method) + 1, id.w_max,
                        std::bit_cast<std::uint64_t>(id.threshold)});
}

std::vector<RunIdentity> plan_runs(const SweepSpec &spec) {
    std::vector<RunIdentity> plan;
    (void)plan_jobs(spec, plan);
    return plan;
}

ProblemInstance default_instance(Family family, std::size_t n, std::uint64_t seed,
                                 double maxcut_edge_probability) {
    ProblemInstance inst = generate_instance(family, n, seed, maxcut_edge_probability);
    return with_extremes(std::move(inst));
}

SweepResult run_sweep(const SweepSpec &spec, const InstanceProvider &provider,
                      const RunSink &sink, const FailureSink &on_failure,
                      const std::atomic<bool> *cancel) {
    std::vector<RunIdentity> plan;
    const std::vector<Job> jobs = plan_jobs(spec, plan);

    StageConfig stages;
    stages.pretrain_steps = spec.pretrain_steps;
    stages.finetune_steps = spec.finetune_steps;
    stages.adam = spec.adam;

    std::map<std::tuple<Family, std::size_t, std::size_t>, ProblemInstance> instances;
    std::mutex instance_mutex;
    std::vector<std::optional<RunSummary>> done(plan.size());
    std::vector<std::optional<RunFailure>> failed(plan.size());
    std::mutex sink_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stopped{false};

    auto get_instance = [&](const Job &job) -> const ProblemInstance & {
        const auto key = std::make_tuple(job.family, job.n, job.instance_index);
        std::lock_guard lock(instance_mutex);
        auto it = instances.find(key);
        if (it == instances.end()) {
            const auto seed = instance_seed(spec.master_seed, job.family, job.n, job.instance_index);
            it = instances.emplace(key, provider ? provider(job.family, job.n, job.instance_index, seed)
                                                 : default_instance(job.family, job.n, seed,
                                                                    spec.maxcut_edge_probability))
                     .first;
        }
        return it->second;
    };

    auto finish = [&](std::size_t run, const TrajectoryRecord &rec) {
        RunSummary s = summarize(rec);
        std::lock_guard lock(sink_mutex);
        if (sink) {
            sink(rec, s);
        }
        done[run] = std::move(s);
    };
    auto fail = [&](std::size_t run, const std::string &message) {
        RunFailure f{plan[run], message};
        std::lock_guard lock(sink_mutex);
        if (on_failure) {
            on_failure(f);
        }
        failed[run] = std::move(f);
    };

    auto execute = [&](const Job &job) {
        try {
            const ProblemInstance &inst = get_instance(job);
            if (!inst.extremes) {
                throw InvalidInstanceError("instance has no energy extremes");
            }
            const auto layout = build_layout(inst, job.depth);
            const auto &init = spec.inits[job.init_pos];
            const auto seed = init_seed(spec.master_seed, job.family, job.n, job.depth,
                                        job.instance_index, init.id);
            if (!job.w_max) {
                const std::size_t run = job.runs.front();
                finish(run, run_exact_only(inst, layout, init, seed, plan[run], stages));
                return;
            }
            StageConfig cfg = stages;
            cfg.w_max = *job.w_max;
            SurrogateEvaluator surrogate(inst.hamiltonian(), PropagationConfig{.w_max = cfg.w_max});
            const ParamSet start = initialize(init, layout, seed, surrogate.objective(), cfg.adam);
            const PretrainResult pre = pretrain(surrogate, start, cfg.pretrain_steps, cfg.adam);
            ExactEvaluator exact(inst);
            for (auto run : job.runs) {
                if (cancel != nullptr && cancel->load()) {
                    stopped = true;
                    return;
                }
                try {
                    cfg.method = plan[run].method;
                    cfg.distill_threshold = plan[run].threshold;
                    finish(run, complete_safe(pre, exact, *inst.extremes, plan[run], cfg));
                } catch (const std::exception &e) {
                    fail(run, e.what());
                }
            }
        } catch (const std::exception &e) {
            for (auto run : job.runs) {
                if (!done[run] && !failed[run]) {
                    fail(run, e.what());
                }
            }
        }
    };

    auto worker = [&] {
        for (;;) {
            if (cancel != nullptr && cancel->load()) {
                stopped = true;
                return;
            }
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) {
                return;
            }
            execute(jobs[j]);
        }
    };

    const std::size_t n_workers = std::max<std::size_t>(1, std::min(spec.workers, jobs.size()));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    SweepResult result;
    result.cancelled = stopped.load();
    for (std::size_t r = 0; r < plan.size(); ++r) {
        if (done[r]) {
            result.summaries.push_back(std::move(*done[r]));
        } else if (failed[r]) {
            result.failures.push_back(std::move(*failed[r]));
        }
    }
    return result;
}

} // namespace maqaoa
