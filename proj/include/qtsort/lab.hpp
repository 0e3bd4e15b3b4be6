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
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qtsort/circuit.hpp"
#include "qtsort/density_matrix.hpp"
#include "qtsort/instance.hpp"
#include "qtsort/state_vector.hpp"

namespace qtsort {

// ---------------------------------------------------------------------------
// Quantum union bound

/// An algorithm that receives S qubits of input-dependent advice in qubits
/// [0, S) and then only runs a fixed query circuit.
struct AdvicedAlgorithm {
    std::string name;
    std::size_t advice_qubits = 1;
    /// Advice state on advice_qubits qubits, as a function of the input.
    std::function<StateVector(const SortInstance &)> advice;
    /// Acts on body.num_qubits() >= advice_qubits qubits.
    Circuit body{1};
    Register output;
    std::function<bool(const SortInstance &, std::uint64_t)> success;
};

/// 2S qubits: Hadamards on [0, S), then CNOT k -> S + k. The first S qubits
/// are then maximally mixed.
inline StateVector mixed_advice_register(std::size_t advice_qubits) {
    StateVector s(2 * advice_qubits);
    for (std::size_t k = 0; k < advice_qubits; ++k) {
        apply_hadamard(s, k);
        apply_cnot(s, k, advice_qubits + k);
    }
    return s;
}

struct UnionBoundInput {
    double p_advice = 0.0;  // exact
    double p_mixed = 0.0;   // exact
    double empirical_advice = 0.0;
    double empirical_mixed = 0.0;
    double sigma = 0.0;  // std. error of empirical_mixed - empirical_advice / 2^S
    bool exact_ok = false;
    bool empirical_ok = false;
};

struct UnionBoundResult {
    std::string name;
    std::size_t advice_qubits = 0;
    std::vector<UnionBoundInput> inputs;
    double p_advice = 0.0;  // mean over inputs
    double p_mixed = 0.0;
    bool passed = false;
};

namespace detail {

inline double success_probability(const StateVector &s, const AdvicedAlgorithm &alg, const SortInstance &x) {
    const auto p = marginal(s, alg.output);
    double total = 0.0;
    for (std::uint64_t v = 0; v < p.size(); ++v) {
        if (p[v] > 0.0 && alg.success(x, v)) {
            total += p[v];
        }
    }
    return total;
}

inline double empirical_success(const StateVector &s, const AdvicedAlgorithm &alg, const SortInstance &x,
                                std::size_t trials, Rng &rng) {
    const auto p = marginal(s, alg.output);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        hits += alg.success(x, sample(p, rng)) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace detail

/// Runs `alg` with its true advice and with the advice register replaced by
/// the maximally mixed state; checks p_mixed >= p_advice / 2^S per input,
/// exactly (to tolerance) and empirically (within 3 sigma over `trials`
/// shots).
inline UnionBoundResult union_bound_experiment(const AdvicedAlgorithm &alg, std::span<const SortInstance> inputs,
                                               std::size_t trials, Rng &rng) {
    const std::size_t S = alg.advice_qubits;
    const std::size_t Q = alg.body.num_qubits();
    if (S == 0 || S > 4 || Q < S) {
        throw std::invalid_argument("union bound experiment needs 1 <= S <= 4 advice qubits inside the body");
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(S));
    UnionBoundResult res;
    res.name = alg.name;
    res.advice_qubits = S;
    res.passed = true;
    for (const auto &x : inputs) {
        QueryCounter scratch;
        const StateVector adv = alg.advice(x);
        if (adv.num_qubits() != S) {
            throw std::invalid_argument("advice state has the wrong width");
        }
        StateVector with_advice = Q == S ? adv : tensor(adv, StateVector(Q - S));
        run_circuit(with_advice, alg.body, x, scratch);

        // Mixed advice: body on [0, Q), purifying partners on [Q, Q + S).
        StateVector mixed(Q + S);
        for (std::size_t k = 0; k < S; ++k) {
            apply_hadamard(mixed, k);
            apply_cnot(mixed, k, Q + k);
        }
        run_circuit(mixed, alg.body, x, scratch);

        UnionBoundInput in;
        in.p_advice = detail::success_probability(with_advice, alg, x);
        in.p_mixed = detail::success_probability(mixed, alg, x);
        in.empirical_advice = detail::empirical_success(with_advice, alg, x, trials, rng);
        in.empirical_mixed = detail::empirical_success(mixed, alg, x, trials, rng);
        const double n = static_cast<double>(trials);
        in.sigma = std::sqrt(in.p_mixed * (1 - in.p_mixed) / n + scale * scale * in.p_advice * (1 - in.p_advice) / n);
        in.exact_ok = in.p_mixed >= in.p_advice * scale - numeric_tolerance();
        in.empirical_ok = in.empirical_mixed >= in.empirical_advice * scale - 3.0 * in.sigma - numeric_tolerance();
        res.passed = res.passed && in.exact_ok && in.empirical_ok;
        res.p_advice += in.p_advice;
        res.p_mixed += in.p_mixed;
        res.inputs.push_back(in);
    }
    if (!inputs.empty()) {
        res.p_advice /= static_cast<double>(inputs.size());
        res.p_mixed /= static_cast<double>(inputs.size());
    }
    return res;
}

// ---------------------------------------------------------------------------
// Query-magnitude adversary

/// One alpha of a position-set bound |G| >= n - k T^2 / alpha^2. `stated`
/// uses k = 1; `rigorous` uses k = 4, which is what the XOR query gate
/// supports (each query moves the state by up to 2 sqrt(magnitude), and the
/// pure-state trace distance is at most twice the Euclidean distance).
struct AlphaCheck {
    double alpha = 0.0;
    std::size_t good = 0;
    double stated_bound = 0.0;
    double rigorous_bound = 0.0;
    bool stated_ok = false;
    bool rigorous_ok = false;
};

struct AdversaryScan {
    std::size_t n = 0;
    std::size_t queries = 0;
    /// Per position: query magnitude summed over all queries.
    std::vector<double> query_magnitude;
    /// Per position: max over admissible replacements of the trace distance
    /// between the two final states.
    std::vector<double> max_distance;
    std::size_t replacements = 0;
    /// Largest |d(x, x') - d(x', x)| seen.
    double symmetry_error = 0.0;
    std::vector<AlphaCheck> checks;
};

/// Values v in {1..range} that may replace x_i: distinct from every x_k.
inline std::vector<std::uint64_t> admissible_replacements(const SortInstance &x) {
    std::unordered_set<std::uint64_t> used(x.values().begin(), x.values().end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 1; v <= x.range_bound(); ++v) {
        if (!used.count(v)) {
            out.push_back(v);
        }
    }
    return out;
}

inline AlphaCheck make_alpha_check(double alpha, std::size_t n, std::size_t queries, std::size_t good) {
    AlphaCheck c;
    c.alpha = alpha;
    c.good = good;
    const double t2 = static_cast<double>(queries) * static_cast<double>(queries);
    c.stated_bound = static_cast<double>(n) - t2 / (alpha * alpha);
    c.rigorous_bound = static_cast<double>(n) - 4.0 * t2 / (alpha * alpha);
    c.stated_ok = static_cast<double>(good) >= c.stated_bound - numeric_tolerance();
    c.rigorous_ok = static_cast<double>(good) >= c.rigorous_bound - numeric_tolerance();
    return c;
}

/// Simulates `body` on x and on every x'(i), and counts, for each alpha, the
/// positions whose every replacement leaves the final state within trace
/// distance 2 alpha.
inline AdversaryScan query_magnitude_scan(const Circuit &body, const SortInstance &x,
                                          std::span<const double> alphas) {
    if (x.size() > 8 || body.query_count() > 4) {
        throw std::invalid_argument("adversary scan is limited to n <= 8 and T <= 4");
    }
    AdversaryScan scan;
    scan.n = x.size();
    scan.queries = body.query_count();

    StateVector base(body.num_qubits());
    QueryCounter scratch;
    run_circuit(base, body, x, scratch, &scan.query_magnitude);
    scan.query_magnitude.resize(std::max(scan.query_magnitude.size(), x.size()), 0.0);
    scan.query_magnitude.resize(x.size());

    const auto values = admissible_replacements(x);
    scan.max_distance.assign(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (auto v : values) {
            const auto alt = final_state(body, x.with_replacement(i, v));
            const double d = pure_trace_distance(base, alt);
            scan.symmetry_error = std::max(scan.symmetry_error, std::abs(d - pure_trace_distance(alt, base)));
            scan.max_distance[i] = std::max(scan.max_distance[i], d);
            ++scan.replacements;
        }
    }
    for (double a : alphas) {
        std::size_t good = 0;
        for (double d : scan.max_distance) {
            good += d <= 2.0 * a + numeric_tolerance() ? 1 : 0;
        }
        scan.checks.push_back(make_alpha_check(a, x.size(), scan.queries, good));
    }
    return scan;
}

// ---------------------------------------------------------------------------
// Conditioned adversary

/// Final measurement of every qubit: F fixes the value of `flag`; E is an
/// arbitrary event on the full outcome.
struct ConditionedEvent {
    Register flag;
    std::uint64_t flag_outcome = 0;
    std::function<bool(std::uint64_t)> event;
};

struct ConditionedCheck {
    double alpha = 0.0;
    double target = 0.0;  // q_x (p_x - alpha)
    std::size_t good = 0;
    double stated_bound = 0.0;
    double rigorous_bound = 0.0;
    bool stated_ok = false;
    bool rigorous_ok = false;
};

struct ConditionedReport {
    std::size_t n = 0;
    std::size_t queries = 0;
    double q_x = 0.0;
    double p_x = 0.0;
    /// Per position: min over replacements of Pr[F and E] on x'(i).
    std::vector<double> min_joint;
    std::vector<ConditionedCheck> checks;
    bool vacuous = false;  // q_x == 0
};

namespace detail {

inline double joint_probability(const StateVector &s, const ConditionedEvent &fe) {
    double p = 0.0;
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
        if (fe.flag.extract(b) == fe.flag_outcome && fe.event(b)) {
            p += s.probability(b);
        }
    }
    return p;
}

}  // namespace detail

/// For a measurement-free `body`: q_x = Pr[F], p_x = Pr[E | F] on x; then
/// for each alpha counts positions i where Pr[F and E] on every x'(i) is at
/// least q_x (p_x - alpha), and compares with n - T^2 / alpha^2.
inline ConditionedReport conditioned_adversary_check(const Circuit &body, const SortInstance &x,
                                                     const ConditionedEvent &fe, std::span<const double> alphas) {
    if (x.size() > 8 || body.query_count() > 4) {
        throw std::invalid_argument("conditioned check is limited to n <= 8 and T <= 4");
    }
    ConditionedReport rep;
    rep.n = x.size();
    rep.queries = body.query_count();
    const auto base = final_state(body, x);
    const auto pf = marginal(base, fe.flag);
    rep.q_x = pf.at(fe.flag_outcome);
    if (rep.q_x <= numeric_tolerance()) {
        rep.vacuous = true;
        return rep;
    }
    rep.p_x = detail::joint_probability(base, fe) / rep.q_x;

    const auto values = admissible_replacements(x);
    rep.min_joint.assign(x.size(), 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (auto v : values) {
            const auto alt = final_state(body, x.with_replacement(i, v));
            rep.min_joint[i] = std::min(rep.min_joint[i], detail::joint_probability(alt, fe));
        }
    }
    for (double a : alphas) {
        ConditionedCheck c;
        c.alpha = a;
        c.target = rep.q_x * (rep.p_x - a);
        for (double j : rep.min_joint) {
            c.good += j >= c.target - numeric_tolerance() ? 1 : 0;
        }
        const auto ac = make_alpha_check(a, x.size(), rep.queries, c.good);
        c.stated_bound = ac.stated_bound;
        c.rigorous_bound = ac.rigorous_bound;
        c.stated_ok = ac.stated_ok;
        c.rigorous_ok = ac.rigorous_ok;
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Circuit slicing

struct SliceReport {
    double slice_length = 0.0;  // delta * sqrt(n) queries
    std::size_t slices = 0;     // ceil(T / slice_length)
    std::vector<std::uint64_t> queries;
    std::vector<std::size_t> outputs;
    std::size_t max_outputs = 0;
    double mean_outputs = 0.0;
};

/// Cuts the query timeline after every floor(k * delta * sqrt(n))-th query
/// and counts the outputs (the counter's marks) that fall into each slice.
inline SliceReport slice_report(const QueryCounter &timeline, std::size_t n, double delta) {
    const double len = delta * std::sqrt(static_cast<double>(n));
    if (!(len >= 1.0)) {
        throw std::invalid_argument("slice length delta * sqrt(n) must be at least one query");
    }
    SliceReport rep;
    rep.slice_length = len;
    const std::uint64_t total = timeline.read();
    rep.slices = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(static_cast<double>(total) / len - 1e-12)));
    auto boundary = [&](std::size_t k) {
        return std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::floor(static_cast<double>(k) * len + 1e-9)));
    };
    rep.queries.resize(rep.slices);
    rep.outputs.assign(rep.slices, 0);
    for (std::size_t s = 0; s < rep.slices; ++s) {
        rep.queries[s] = boundary(s + 1) - boundary(s);
    }
    if (rep.slices > 0) {
        rep.queries.back() = total - boundary(rep.slices - 1);
    }
    for (const auto &m : timeline.marks()) {
        // An output made after q queries sits in the slice holding query q.
        std::size_t s = 0;
        while (s + 1 < rep.slices && m.at > boundary(s + 1)) {
            ++s;
        }
        ++rep.outputs[s];
    }
    for (auto o : rep.outputs) {
        rep.max_outputs = std::max(rep.max_outputs, o);
    }
    rep.mean_outputs = static_cast<double>(timeline.marks().size()) / static_cast<double>(rep.slices);
    return rep;
}

}  // namespace qtsort
