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

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtsort/baseline.hpp"
#include "qtsort/io.hpp"
#include "qtsort/quantum_sort.hpp"
#include "qtsort/search.hpp"

namespace qtsort {

/// Raised for configurations that cannot run; the CLI maps it to exit code 2.
class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::size_t n = 0;
    std::size_t space = 0;
    double c = 2.0;
    double c_dh = 22.5;
    std::optional<double> eps;
    std::optional<double> initial_eps;
    std::optional<double> successor_eps;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::string out;
    std::string format;  // empty: csv for tradeoff, json otherwise
    std::size_t workers = 1;
    /// grover: marked items and fixed iteration count.
    std::size_t k = 1;
    std::optional<std::size_t> t;
    /// tradeoff: n values, and either explicit S values or S = s_factor * log2(n)^2.
    std::vector<std::size_t> n_list;
    std::vector<std::size_t> s_list;
    double s_factor = 3.0;
    bool classical = false;
    /// Adds wall-clock time to reports, which makes them non-reproducible.
    bool wall_time = false;

    SearchConfig search() const { return {c_dh}; }

    SortConfig sort() const {
        SortConfig s;
        s.c = c;
        s.search = search();
        s.initial_eps = initial_eps;
        s.successor_eps = successor_eps;
        return s;
    }

    void validate() const {
        auto need = [](bool ok, const std::string &what) {
            if (!ok) {
                throw usage_error(what);
            }
        };
        need(trials >= 1, "--trials must be at least 1");
        need(workers >= 1, "--workers must be at least 1");
        need(c > 0.0, "--c must be positive");
        need(c_dh > 0.0, "--c-dh must be positive");
        need(format.empty() || format == "json" || format == "csv", "--format must be json or csv");
        for (const auto &e : {eps, initial_eps, successor_eps}) {
            need(!e || (*e > 0.0 && *e < 1.0), "error bounds must lie in (0, 1)");
        }
        if (command == "grover" || command == "minfind" || command == "sort" || command == "baseline") {
            need(n >= 1, "--n is required");
        }
        if (command == "minfind") {
            need(n >= 2, "--n must be at least 2");
        }
        if (command == "sort" || command == "baseline") {
            need(n >= 2, "--n must be at least 2");
            need(space >= 1, "--s-space is required");
        }
        if (command == "grover") {
            need(k >= 1 && k < n, "--k must satisfy 1 <= k < n");
        }
        if (command == "tradeoff") {
            need(!n_list.empty() || n >= 2, "--n or --n-list is required");
            need(s_factor > 0.0, "--s-factor must be positive");
        }
    }
};

/// Reads a JSON object whose keys mirror the long flags (dashes become
/// underscores). Unknown keys are rejected.
inline void apply_config_json(RunConfig &cfg, const nlohmann::json &j) {
    if (!j.is_object()) {
        throw usage_error("config file must hold a JSON object");
    }
    try {
        for (const auto &[key, v] : j.items()) {
            if (key == "n") cfg.n = v.get<std::size_t>();
            else if (key == "s_space") cfg.space = v.get<std::size_t>();
            else if (key == "c") cfg.c = v.get<double>();
            else if (key == "c_dh") cfg.c_dh = v.get<double>();
            else if (key == "eps") cfg.eps = v.get<double>();
            else if (key == "initial_eps") cfg.initial_eps = v.get<double>();
            else if (key == "successor_eps") cfg.successor_eps = v.get<double>();
            else if (key == "trials") cfg.trials = v.get<std::size_t>();
            else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
            else if (key == "out") cfg.out = v.get<std::string>();
            else if (key == "format") cfg.format = v.get<std::string>();
            else if (key == "workers") cfg.workers = v.get<std::size_t>();
            else if (key == "k") cfg.k = v.get<std::size_t>();
            else if (key == "t") cfg.t = v.get<std::size_t>();
            else if (key == "n_list") cfg.n_list = v.get<std::vector<std::size_t>>();
            else if (key == "s_list") cfg.s_list = v.get<std::vector<std::size_t>>();
            else if (key == "s_factor") cfg.s_factor = v.get<double>();
            else if (key == "classical") cfg.classical = v.get<bool>();
            else if (key == "wall_time") cfg.wall_time = v.get<bool>();
            else throw usage_error("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception &e) {
        throw usage_error(std::string("bad config value: ") + e.what());
    }
}

/// Runs f(i, seed_i) for i < trials on `workers` threads, with
/// seed_i = derive_seed(master, i). Results come back in trial order, so they
/// do not depend on the worker count.
template <class F>
auto run_trials(std::size_t trials, std::size_t workers, std::uint64_t master, F &&f) {
    using R = std::decay_t<std::invoke_result_t<F &, std::size_t, std::uint64_t>>;
    std::vector<std::optional<R>> slots(trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < trials; i = next++) {
            try {
                slots[i].emplace(f(i, derive_seed(master, i)));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    const std::size_t w = std::max<std::size_t>(1, std::min(workers, trials));
    if (w == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < w; ++k) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<R> out;
    out.reserve(trials);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for one value
    double min = 0.0;
    double max = 0.0;
};

inline Summary summarize(const std::vector<double> &v) {
    Summary s;
    if (v.empty()) {
        return s;
    }
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    for (double x : v) {
        s.mean += x;
    }
    s.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
    return s;
}

inline nlohmann::json to_json(const Summary &s) {
    return {{"mean", s.mean}, {"std", s.stddev}, {"min", s.min}, {"max", s.max}};
}

/// Least-squares slope of log y against log x.
inline std::optional<double> loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        return std::nullopt;
    }
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += std::log(x[k]);
        my += std::log(y[k]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = std::log(x[k]) - mx;
        sxy += dx * (std::log(y[k]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

// ---------------------------------------------------------------------------
// sort / baseline

struct SortTrial {
    std::uint64_t seed = 0;
    std::uint64_t queries = 0;
    bool success = false;
    std::size_t correct = 0;
    std::vector<bool> rank_flags;
    std::size_t peak_space = 0;
    SpaceLedger::Items space_items;
    PhaseBreakdown phases;
    std::size_t heap_bits = 0;
    std::size_t retired_blocks = 0;
    std::size_t records = 0;
    double wall_seconds = 0.0;
};

/// One seeded sort: the instance comes from derive_seed(seed, 0), the
/// algorithm's randomness from derive_seed(seed, 1).
inline SortTrial sort_trial(std::size_t n, std::size_t space, std::uint64_t seed, const SortConfig &cfg,
                            bool classical) {
    const auto x = random_instance_seeded(n, derive_seed(seed, 0));
    Rng rng(derive_seed(seed, 1));
    const auto run = classical ? classical_baseline_sort(x, space, cfg) : quantum_sort(x, space, rng, cfg);
    const auto v = verify_output(run.output, RankOracle(x));
    SortTrial t;
    t.seed = seed;
    t.queries = run.report.queries;
    t.success = v.all_correct;
    t.correct = v.correct;
    t.rank_flags = v.flags;
    t.peak_space = run.report.peak_space;
    t.space_items = run.report.space_items;
    t.phases = run.report.phases;
    t.heap_bits = run.report.plan.heap_bits();
    t.retired_blocks = run.report.retired_blocks;
    t.records = run.output.records.size();
    t.wall_seconds = run.report.wall_seconds;
    return t;
}

struct SortSummary {
    std::vector<SortTrial> trials;
    BlockPlan plan;
    Summary queries;
    double success_rate = 0.0;
    std::vector<double> rank_success;  // per rank, over trials
    double mean_rank_success = 0.0;
    std::size_t max_peak_space = 0;
    /// Ledger peak within S, phase totals matching T, n records per run.
    bool invariants_ok = true;
    std::vector<std::string> violations;
};

inline SortSummary run_sort_trials(const RunConfig &cfg) {
    SortSummary s;
    s.plan = plan_blocks(cfg.n, cfg.space, cfg.c);
    const auto sc = cfg.sort();
    s.trials = run_trials(cfg.trials, cfg.workers, cfg.seed, [&](std::size_t, std::uint64_t seed) {
        return sort_trial(cfg.n, cfg.space, seed, sc, cfg.classical);
    });
    std::vector<double> q;
    s.rank_success.assign(cfg.n, 0.0);
    std::size_t ok = 0;
    for (const auto &t : s.trials) {
        q.push_back(static_cast<double>(t.queries));
        ok += t.success ? 1 : 0;
        for (std::size_t r = 0; r < t.rank_flags.size() && r < cfg.n; ++r) {
            s.rank_success[r] += t.rank_flags[r] ? 1.0 : 0.0;
        }
        s.max_peak_space = std::max(s.max_peak_space, t.peak_space);
        auto violate = [&](bool bad, const std::string &what) {
            if (bad) {
                s.invariants_ok = false;
                s.violations.push_back("seed " + std::to_string(t.seed) + ": " + what);
            }
        };
        violate(t.peak_space > cfg.space, "peak space " + std::to_string(t.peak_space) + " exceeds S");
        violate(t.phases.total() != t.queries, "phase breakdown does not add up to T");
        violate(t.records != cfg.n, "emitted " + std::to_string(t.records) + " records");
    }
    for (auto &r : s.rank_success) {
        r /= static_cast<double>(s.trials.size());
        s.mean_rank_success += r;
    }
    s.mean_rank_success /= static_cast<double>(cfg.n);
    s.queries = summarize(q);
    s.success_rate = static_cast<double>(ok) / static_cast<double>(s.trials.size());
    return s;
}

inline nlohmann::json sort_report(const RunConfig &cfg, const SortSummary &s) {
    const auto &peak = *std::max_element(s.trials.begin(), s.trials.end(), [](const auto &a, const auto &b) {
        return a.peak_space < b.peak_space;
    });
    std::vector<double> ph[4];
    for (const auto &t : s.trials) {
        ph[0].push_back(static_cast<double>(t.phases.initial_minima));
        ph[1].push_back(static_cast<double>(t.phases.heap));
        ph[2].push_back(static_cast<double>(t.phases.successor));
        ph[3].push_back(static_cast<double>(t.phases.output));
    }
    std::size_t worst_rank = 1;
    for (std::size_t r = 0; r < s.rank_success.size(); ++r) {
        if (s.rank_success[r] < s.rank_success[worst_rank - 1]) {
            worst_rank = r + 1;
        }
    }
    nlohmann::json trials = nlohmann::json::array();
    for (const auto &t : s.trials) {
        nlohmann::json row{{"seed", t.seed},
                           {"T", t.queries},
                           {"success", t.success},
                           {"correct_ranks", t.correct},
                           {"peak_space", t.peak_space}};
        if (cfg.wall_time) {
            row["wall_seconds"] = t.wall_seconds;
        }
        trials.push_back(row);
    }
    nlohmann::json j{
        {"command", cfg.classical ? "baseline" : "sort"},
        {"n", cfg.n},
        {"S", cfg.space},
        {"c", cfg.c},
        {"c_dh", cfg.c_dh},
        {"seed", cfg.seed},
        {"trials", cfg.trials},
        {"plan", to_json(s.plan)},
        {"T_queries", to_json(s.queries)},
        {"space_itemization",
         {{"peak", s.max_peak_space}, {"limit", cfg.space}, {"heap_bits", s.plan.heap_bits()}, {"items", to_json(peak.space_items)}}},
        {"phase_breakdown",
         {{"initial_minima", summarize(ph[0]).mean},
          {"heap", summarize(ph[1]).mean},
          {"successor", summarize(ph[2]).mean},
          {"output", summarize(ph[3]).mean}}},
        {"success", {{"rate", s.success_rate}, {"trials", s.trials.size()}}},
        {"per_rank_flags_summary",
         {{"mean_rank_success", s.mean_rank_success},
          {"min_rank_success", s.rank_success[worst_rank - 1]},
          {"worst_rank", worst_rank}}},
        {"invariants", {{"ok", s.invariants_ok}, {"violations", s.violations}}},
        {"per_trial", trials},
        {"version", QTSORT_VERSION}};
    return j;
}

// ---------------------------------------------------------------------------
// grover / minfind

struct GroverSummary {
    std::size_t N = 0, k = 0, t = 0;
    double success_rate = 0.0;
    std::optional<double> analytic;  // when N is a power of two
    std::uint64_t queries = 0;
    bool invariants_ok = true;
};

inline std::size_t default_grover_rounds(std::size_t N, std::size_t k) {
    return static_cast<std::size_t>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(k))));
}

/// The k smallest of a seeded instance are marked ("value below the
/// (k+1)-th smallest"); t fixed rounds, one measurement per trial.
inline GroverSummary run_grover_trials(const RunConfig &cfg) {
    GroverSummary g;
    g.N = cfg.n;
    g.k = cfg.k;
    g.t = cfg.t.value_or(default_grover_rounds(cfg.n, cfg.k));
    struct Shot {
        bool hit;
        std::uint64_t queries;
    };
    const auto shots = run_trials(cfg.trials, cfg.workers, cfg.seed, [&](std::size_t, std::uint64_t seed) {
        const auto x = random_instance_seeded(cfg.n, derive_seed(seed, 0));
        Rng rng(derive_seed(seed, 1));
        const RankOracle truth(x);
        const auto pred = PredicateSpec::less_than(truth.position(cfg.k + 1));
        QueryCounter counter;
        const auto got = grover_fixed(SearchDomain::whole(cfg.n), pred, g.t, x, rng, counter);
        return Shot{got && x.value(*got) < x.value(truth.position(cfg.k + 1)), counter.read()};
    });
    std::size_t hits = 0;
    for (const auto &s : shots) {
        hits += s.hit ? 1 : 0;
        g.queries += s.queries;
        g.invariants_ok = g.invariants_ok && s.queries == g.t;
    }
    g.success_rate = static_cast<double>(hits) / static_cast<double>(shots.size());
    if (std::has_single_bit(cfg.n)) {
        const double theta = std::asin(std::sqrt(static_cast<double>(cfg.k) / static_cast<double>(cfg.n)));
        const double s = std::sin((2.0 * static_cast<double>(g.t) + 1.0) * theta);
        g.analytic = s * s;
    }
    return g;
}

inline nlohmann::json grover_report(const RunConfig &cfg, const GroverSummary &g) {
    return {{"command", "grover"},
            {"N", g.N},
            {"k", g.k},
            {"t", g.t},
            {"seed", cfg.seed},
            {"trials", cfg.trials},
            {"success_rate", g.success_rate},
            {"analytic_success", g.analytic ? nlohmann::json(*g.analytic) : nlohmann::json(nullptr)},
            {"T_queries", g.queries},
            {"invariants", {{"ok", g.invariants_ok}}},
            {"version", QTSORT_VERSION}};
}

struct MinFindSummary {
    std::size_t N = 0;
    double eps = 0.0;
    std::size_t repetitions = 0;
    std::uint64_t budget = 0;  // r * floor(c_dh sqrt(N)) + (r - 1)
    double failure_rate = 0.0;
    Summary queries;
    std::uint64_t max_queries = 0;
    bool invariants_ok = true;
};

inline MinFindSummary run_minfind_trials(const RunConfig &cfg) {
    MinFindSummary m;
    m.N = cfg.n;
    m.eps = cfg.eps.value_or(1.0 / 256.0);
    m.repetitions = detail::repetitions_for(m.eps);
    const SearchDomain dom = SearchDomain::whole(cfg.n);
    m.budget = m.repetitions * detail::dh_budget(dom, cfg.search()) + (m.repetitions - 1);
    struct Shot {
        bool fail;
        std::uint64_t queries;
    };
    const auto shots = run_trials(cfg.trials, cfg.workers, cfg.seed, [&](std::size_t, std::uint64_t seed) {
        const auto x = random_instance_seeded(cfg.n, derive_seed(seed, 0));
        Rng rng(derive_seed(seed, 1));
        QueryCounter counter;
        const auto r = min_find(dom, m.eps, x, rng, counter, cfg.search());
        return Shot{!r.index || *r.index != RankOracle(x).argmin({0, cfg.n}), counter.read()};
    });
    std::size_t fails = 0;
    std::vector<double> q;
    for (const auto &s : shots) {
        fails += s.fail ? 1 : 0;
        q.push_back(static_cast<double>(s.queries));
        m.max_queries = std::max(m.max_queries, s.queries);
    }
    m.invariants_ok = m.max_queries <= m.budget;
    m.failure_rate = static_cast<double>(fails) / static_cast<double>(shots.size());
    m.queries = summarize(q);
    return m;
}

inline nlohmann::json minfind_report(const RunConfig &cfg, const MinFindSummary &m) {
    return {{"command", "minfind"},
            {"N", m.N},
            {"eps", m.eps},
            {"repetitions", m.repetitions},
            {"c_dh", cfg.c_dh},
            {"seed", cfg.seed},
            {"trials", cfg.trials},
            {"failure_rate", m.failure_rate},
            {"T_queries", to_json(m.queries)},
            {"query_budget", m.budget},
            {"invariants", {{"ok", m.invariants_ok}}},
            {"version", QTSORT_VERSION}};
}

// ---------------------------------------------------------------------------
// tradeoff

struct TradeoffRecord {
    std::size_t n = 0;
    std::size_t space = 0;
    double c = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;  // master seed; trials use derive_seed(derive_seed(seed, n), S)
    double t_mean = 0.0;
    double t_std = 0.0;
    double success_rate = 0.0;
    std::optional<std::string> skipped;

    double ts() const { return t_mean * static_cast<double>(space); }
    double t2s() const { return t_mean * t_mean * static_cast<double>(space); }
};

struct TradeoffTable {
    std::vector<TradeoffRecord> rows;
    std::optional<double> slope;
    bool invariants_ok = true;
};

/// S = round(factor * log2(n)^2).
inline std::size_t scheduled_space(std::size_t n, double factor) {
    const double l = std::log2(static_cast<double>(n));
    return static_cast<std::size_t>(std::llround(factor * l * l));
}

inline TradeoffTable run_tradeoff(const RunConfig &cfg) {
    TradeoffTable tab;
    const std::vector<std::size_t> ns = cfg.n_list.empty() ? std::vector<std::size_t>{cfg.n} : cfg.n_list;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (cfg.s_list.empty()) {
        for (auto n : ns) {
            pairs.emplace_back(n, cfg.space && cfg.n_list.empty() ? cfg.space : scheduled_space(n, cfg.s_factor));
        }
    } else {
        for (auto n : ns) {
            for (auto s : cfg.s_list) {
                pairs.emplace_back(n, s);
            }
        }
    }
    std::vector<double> xs, ys;
    for (const auto &[n, s] : pairs) {
        TradeoffRecord r;
        r.n = n;
        r.space = s;
        r.c = cfg.c;
        r.trials = cfg.trials;
        r.seed = cfg.seed;
        RunConfig sub = cfg;
        sub.n = n;
        sub.space = s;
        sub.seed = derive_seed(derive_seed(cfg.seed, n), s);
        try {
            plan_blocks(n, s, cfg.c);
        } catch (const std::invalid_argument &e) {
            r.skipped = e.what();
            tab.rows.push_back(r);
            continue;
        }
        const auto sum = run_sort_trials(sub);
        r.t_mean = sum.queries.mean;
        r.t_std = sum.queries.stddev;
        r.success_rate = sum.success_rate;
        tab.invariants_ok = tab.invariants_ok && sum.invariants_ok;
        tab.rows.push_back(r);
        xs.push_back(static_cast<double>(n));
        ys.push_back(r.t_mean);
    }
    std::vector<std::size_t> distinct(ns.begin(), ns.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 2 && cfg.s_list.size() <= 1) {
        tab.slope = loglog_slope(xs, ys);
    }
    return tab;
}

inline std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

inline std::string tradeoff_csv(const TradeoffTable &tab) {
    std::ostringstream os;
    os << "# qtsort " << QTSORT_VERSION << "\n";
    os << "n,S,c,trials,seed,T_mean,T_std,success_rate,TS,T2S\n";
    for (const auto &r : tab.rows) {
        if (r.skipped) {
            os << "# skipped n=" << r.n << " S=" << r.space << ": " << *r.skipped << "\n";
            continue;
        }
        os << r.n << ',' << r.space << ',' << format_number(r.c) << ',' << r.trials << ',' << r.seed << ','
           << format_number(r.t_mean) << ',' << format_number(r.t_std) << ',' << format_number(r.success_rate) << ','
           << format_number(r.ts()) << ',' << format_number(r.t2s()) << "\n";
    }
    if (tab.slope) {
        os << "# slope_log_T_vs_log_n=" << format_number(*tab.slope) << "\n";
    }
    return os.str();
}

inline nlohmann::json tradeoff_json(const RunConfig &cfg, const TradeoffTable &tab) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : tab.rows) {
        nlohmann::json j{{"n", r.n}, {"S", r.space}, {"c", r.c}, {"trials", r.trials}, {"seed", r.seed}};
        if (r.skipped) {
            j["skipped"] = *r.skipped;
        } else {
            j["T_mean"] = r.t_mean;
            j["T_std"] = r.t_std;
            j["success_rate"] = r.success_rate;
            j["TS"] = r.ts();
            j["T2S"] = r.t2s();
        }
        rows.push_back(j);
    }
    return {{"command", "tradeoff"},
            {"algorithm", cfg.classical ? "classical" : "quantum"},
            {"seed", cfg.seed},
            {"rows", rows},
            {"slope", tab.slope ? nlohmann::json(*tab.slope) : nlohmann::json(nullptr)},
            {"invariants", {{"ok", tab.invariants_ok}}},
            {"version", QTSORT_VERSION}};
}

}  // namespace qtsort
