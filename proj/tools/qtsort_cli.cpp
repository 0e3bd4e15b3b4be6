// Copyright 2026 The qtsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtsort/experiments.hpp"
#include "qtsort/lab_report.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kInvariantViolation = 1;

struct Flags {
    qtsort::RunConfig cfg;
    std::string config_path;
    // Copies a flag's value into a config-file-derived RunConfig when the flag was given.
    std::vector<std::pair<CLI::Option *, std::function<void(qtsort::RunConfig &)>>> overrides;
};

template <class T>
void bind_flag(CLI::App &app, Flags &f, const std::string &name, T qtsort::RunConfig::*field, const std::string &help) {
    auto *opt = app.add_option(name, f.cfg.*field, help);
    f.overrides.emplace_back(opt, [&f, field](qtsort::RunConfig &c) { c.*field = f.cfg.*field; });
}

void common_flags(CLI::App &app, Flags &f) {
    bind_flag(app, f, "--seed", &qtsort::RunConfig::seed, "master seed");
    bind_flag(app, f, "--trials", &qtsort::RunConfig::trials, "seeded repetitions");
    bind_flag(app, f, "--out", &qtsort::RunConfig::out, "output file (stdout when omitted)");
    bind_flag(app, f, "--format", &qtsort::RunConfig::format, "json or csv");
    bind_flag(app, f, "--workers", &qtsort::RunConfig::workers, "worker threads");
    bind_flag(app, f, "--c-dh", &qtsort::RunConfig::c_dh, "minimum-finding budget constant");
    app.add_option("--config", f.config_path, "JSON config; flags override its values")->check(CLI::ExistingFile);
}

void sort_flags(CLI::App &app, Flags &f) {
    bind_flag(app, f, "--n", &qtsort::RunConfig::n, "input length");
    bind_flag(app, f, "--s-space", &qtsort::RunConfig::space, "space budget S in qubits");
    bind_flag(app, f, "--c", &qtsort::RunConfig::c, "block planning constant");
    bind_flag(app, f, "--initial-eps", &qtsort::RunConfig::initial_eps, "error of the block-minimum searches");
    bind_flag(app, f, "--successor-eps", &qtsort::RunConfig::successor_eps, "error of the successor searches");
    app.add_flag("--wall-time", f.cfg.wall_time, "record wall-clock time per trial");
}

qtsort::RunConfig resolve(Flags &f, const std::string &command) {
    qtsort::RunConfig cfg = f.cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw qtsort::usage_error(std::string("cannot parse config: ") + e.what());
        }
        cfg = qtsort::RunConfig{};
        qtsort::apply_config_json(cfg, j);
        for (auto &[opt, copy] : f.overrides) {
            if (opt->count() > 0) {
                copy(cfg);
            }
        }
        cfg.wall_time = cfg.wall_time || f.cfg.wall_time;
        cfg.classical = cfg.classical || f.cfg.classical;
    }
    cfg.command = command;
    cfg.validate();
    return cfg;
}

void emit(const qtsort::RunConfig &cfg, const nlohmann::json &j) { qtsort::write_output(cfg.out, j.dump(2) + "\n"); }

std::string one_row_csv(const qtsort::RunConfig &cfg, const qtsort::SortSummary &s) {
    qtsort::TradeoffTable tab;
    qtsort::TradeoffRecord r;
    r.n = cfg.n;
    r.space = cfg.space;
    r.c = cfg.c;
    r.trials = cfg.trials;
    r.seed = cfg.seed;
    r.t_mean = s.queries.mean;
    r.t_std = s.queries.stddev;
    r.success_rate = s.success_rate;
    tab.rows.push_back(r);
    return qtsort::tradeoff_csv(tab);
}

int cmd_sort(const qtsort::RunConfig &cfg) {
    const auto s = qtsort::run_sort_trials(cfg);
    if (cfg.format == "csv") {
        qtsort::write_output(cfg.out, one_row_csv(cfg, s));
    } else {
        emit(cfg, qtsort::sort_report(cfg, s));
    }
    std::fprintf(stderr, "%s n=%zu S=%zu: T_mean=%.1f success_rate=%.4f peak_space=%zu\n", cfg.command.c_str(), cfg.n,
                 cfg.space, s.queries.mean, s.success_rate, s.max_peak_space);
    for (const auto &v : s.violations) {
        std::fprintf(stderr, "invariant violation: %s\n", v.c_str());
    }
    return s.invariants_ok ? 0 : kInvariantViolation;
}

int cmd_grover(const qtsort::RunConfig &cfg) {
    const auto g = qtsort::run_grover_trials(cfg);
    emit(cfg, qtsort::grover_report(cfg, g));
    std::fprintf(stderr, "grover N=%zu k=%zu t=%zu: success_rate=%.4f\n", g.N, g.k, g.t, g.success_rate);
    return g.invariants_ok ? 0 : kInvariantViolation;
}

int cmd_minfind(const qtsort::RunConfig &cfg) {
    const auto m = qtsort::run_minfind_trials(cfg);
    emit(cfg, qtsort::minfind_report(cfg, m));
    std::fprintf(stderr, "minfind N=%zu eps=%g: failure_rate=%.6f max_queries=%llu budget=%llu\n", m.N, m.eps,
                 m.failure_rate, static_cast<unsigned long long>(m.max_queries),
                 static_cast<unsigned long long>(m.budget));
    return m.invariants_ok ? 0 : kInvariantViolation;
}

int cmd_tradeoff(const qtsort::RunConfig &cfg) {
    const auto tab = qtsort::run_tradeoff(cfg);
    if (cfg.format == "json") {
        emit(cfg, qtsort::tradeoff_json(cfg, tab));
    } else {
        qtsort::write_output(cfg.out, qtsort::tradeoff_csv(tab));
    }
    for (const auto &r : tab.rows) {
        if (r.skipped) {
            std::fprintf(stderr, "skipped n=%zu S=%zu: %s\n", r.n, r.space, r.skipped->c_str());
        }
    }
    return tab.invariants_ok ? 0 : kInvariantViolation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Time-space tradeoff experiments for quantum sorting"};
    app.set_version_flag("--version", std::string("qtsort ") + QTSORT_VERSION);
    app.require_subcommand(1);

    Flags sort_f, base_f, grover_f, min_f, trade_f;

    auto *sort = app.add_subcommand("sort", "quantum sort of seeded random instances");
    common_flags(*sort, sort_f);
    sort_flags(*sort, sort_f);

    auto *baseline = app.add_subcommand("baseline", "classical scan sort with the same block plan");
    common_flags(*baseline, base_f);
    sort_flags(*baseline, base_f);

    auto *grover = app.add_subcommand("grover", "Grover search with a fixed number of rounds");
    common_flags(*grover, grover_f);
    bind_flag(*grover, grover_f, "--n", &qtsort::RunConfig::n, "search space size N");
    bind_flag(*grover, grover_f, "--k", &qtsort::RunConfig::k, "number of marked items");
    bind_flag(*grover, grover_f, "--t", &qtsort::RunConfig::t, "Grover rounds (default floor(pi/4 sqrt(N/k)))");

    auto *minfind = app.add_subcommand("minfind", "boosted minimum finding against brute force");
    common_flags(*minfind, min_f);
    bind_flag(*minfind, min_f, "--n", &qtsort::RunConfig::n, "search space size N");
    bind_flag(*minfind, min_f, "--eps", &qtsort::RunConfig::eps, "error bound (default 1/256)");

    auto *tradeoff = app.add_subcommand("tradeoff", "sweep of (n, S) pairs");
    common_flags(*tradeoff, trade_f);
    sort_flags(*tradeoff, trade_f);
    bind_flag(*tradeoff, trade_f, "--n-list", &qtsort::RunConfig::n_list, "input lengths");
    bind_flag(*tradeoff, trade_f, "--s-list", &qtsort::RunConfig::s_list, "explicit space budgets");
    bind_flag(*tradeoff, trade_f, "--s-factor", &qtsort::RunConfig::s_factor, "S = factor * log2(n)^2 when no S is given");
    tradeoff->add_flag("--classical", trade_f.cfg.classical, "use the classical scan sort");

    qtsort::LabOptions lab_opt;
    std::string lab_out;
    bool inject_bug = false;
    auto *lab = app.add_subcommand("lab", "lower-bound lab matrix");
    lab->add_option("--seed", lab_opt.seed, "master seed");
    lab->add_option("--out", lab_out, "report file (stdout when omitted)");
    lab->add_option("--union-trials", lab_opt.union_trials, "shots per input in the union-bound runs")
        ->check(CLI::PositiveNumber);
    lab->add_option("--magnitude-constant", lab_opt.magnitude_constant,
                    "k in the position-set bound n - k T^2 / alpha^2")
        ->check(CLI::PositiveNumber);
    lab->add_flag("--inject-diffusion-bug", inject_bug, "flip the sign in the Grover fixture's diffusion");
    lab->add_flag("!--no-slices", lab_opt.include_slices, "skip the sort-run slicing check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*lab) {
            lab_opt.diffusion = inject_bug ? qtsort::DiffusionMode::flipped_sign : qtsort::DiffusionMode::correct;
            const auto rep = qtsort::run_lab(lab_opt);
            qtsort::write_output(lab_out, rep.json.dump(2) + "\n");
            for (const auto &f : rep.failures) {
                std::fprintf(stderr, "lab failure: %s\n", f.c_str());
            }
            std::fprintf(stderr, "lab: %s (%zu failures)\n", rep.passed ? "pass" : "FAIL", rep.failures.size());
            return rep.passed ? 0 : kInvariantViolation;
        }
        if (*sort) {
            return cmd_sort(resolve(sort_f, "sort"));
        }
        if (*baseline) {
            auto cfg = resolve(base_f, "baseline");
            cfg.classical = true;
            return cmd_sort(cfg);
        }
        if (*grover) {
            return cmd_grover(resolve(grover_f, "grover"));
        }
        if (*minfind) {
            return cmd_minfind(resolve(min_f, "minfind"));
        }
        if (*tradeoff) {
            return cmd_tradeoff(resolve(trade_f, "tradeoff"));
        }
    } catch (const qtsort::usage_error &e) {
        std::fprintf(stderr, "usage error: %s\n%s", e.what(), app.help().c_str());
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsageError;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInvariantViolation;
    }
    return kUsageError;
}
