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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtsort/circuit.hpp"
#include "qtsort/density_matrix.hpp"
#include "qtsort/lab.hpp"
#include "qtsort/quantum_sort.hpp"

namespace qtsort {

enum class DiffusionMode { correct, flipped_sign };

/// Probability of measuring `marked` after t Grover rounds on N = 2^q items.
/// `flipped_sign` replaces the inversion a <- 2 mean - a by a <- 2 mean + a.
inline double grover_success_probability(std::size_t index_qubits, std::uint64_t marked, std::size_t rounds,
                                         DiffusionMode mode = DiffusionMode::correct) {
    StateVector s(index_qubits);
    const Register idx{0, index_qubits};
    apply_hadamard(s, idx);
    for (std::size_t r = 0; r < rounds; ++r) {
        apply_phase_flip(s, [&](std::uint64_t k) { return k == marked; });
        if (mode == DiffusionMode::correct) {
            apply_diffusion(s, idx);
        } else {
            auto amps = s.amplitudes();
            amplitude mean = 0.0;
            for (auto a : amps) {
                mean += a;
            }
            mean /= static_cast<double>(amps.size());
            for (auto &a : amps) {
                a = 2.0 * mean + a;
            }
        }
    }
    return s.probability(marked) / s.norm_squared();
}

/// sin^2((2t + 1) theta) with sin^2 theta = k / N.
inline double grover_analytic(std::size_t N, std::size_t k, std::size_t rounds) {
    const double theta = std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(N)));
    const double s = std::sin((2.0 * static_cast<double>(rounds) + 1.0) * theta);
    return s * s;
}

struct LabOptions {
    std::uint64_t seed = 1;
    std::size_t union_trials = 4000;
    /// k in the position-set bound |G| >= n - k T^2 / alpha^2 that gates the
    /// pass flag. 1 is the textbook statement; 4 is what XOR queries support.
    double magnitude_constant = 1.0;
    DiffusionMode diffusion = DiffusionMode::correct;
    bool include_slices = true;
};

struct LabReport {
    nlohmann::json json;
    bool passed = true;
    std::vector<std::string> failures;

    void record(const std::string &name, bool ok) {
        if (!ok) {
            passed = false;
            failures.push_back(name);
        }
    }
};

inline std::vector<double> default_alphas() {
    std::vector<double> a;
    for (int k = 2; k <= 40; ++k) {
        a.push_back(0.05 * k);
    }
    return a;
}

namespace detail {

inline nlohmann::json to_json(const DensityDiagnostics &d) {
    return {{"hermitian_error", d.hermitian_error}, {"trace_error", d.trace_error}, {"min_eigenvalue", d.min_eigenvalue}};
}

inline bool gated(double good, double n, double queries, double alpha, double k) {
    return good >= n - k * queries * queries / (alpha * alpha) - numeric_tolerance();
}

inline Circuit uniform_single_query(const QueryLayout &l) {
    Circuit c(l.num_qubits());
    c.h(l.index);
    c.query(l.index, l.value);
    return c;
}

inline void lab_grover(LabReport &rep, const LabOptions &opt) {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (std::size_t t = 0; t <= 3; ++t) {
        const double measured = grover_success_probability(4, 5, t, opt.diffusion);
        const double expected = grover_analytic(16, 1, t);
        const bool pass = std::abs(measured - expected) <= 1e-9;
        ok = ok && pass;
        rows.push_back({{"N", 16}, {"k", 1}, {"t", t}, {"measured", measured}, {"analytic", expected}, {"pass", pass}});
    }
    rep.json["grover_analytic"] = rows;
    rep.record("grover_analytic", ok);
}

inline void lab_mixed_preparation(LabReport &rep) {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (std::size_t S = 1; S <= 3; ++S) {
        const auto rho = reduced_density(mixed_advice_register(S), {0, S});
        const double dev = (rho.matrix() - DensityMatrix::maximally_mixed(S).matrix()).cwiseAbs().maxCoeff();
        const bool pass = dev <= 1e-9;
        ok = ok && pass;
        rows.push_back({{"S", S}, {"max_deviation", dev}, {"bound", 1e-9}, {"pass", pass}});
    }
    rep.json["mixed_state_preparation"] = rows;
    rep.record("mixed_state_preparation", ok);
}

inline void lab_mix_decomposition(LabReport &rep, Rng &rng) {
    double worst_reconstruction = 0.0, worst_herm = 0.0, worst_trace = 0.0, min_eig = 1.0;
    bool ok = true;
    for (int k = 0; k < 100; ++k) {
        const std::size_t m = 1 + k % 4;
        const std::size_t dim = std::size_t{1} << m;
        const auto rho = random_density(m, 1 + uniform_below(rng, dim), rng);
        try {
            const auto sigma = mix_decompose(rho, m);
            const double w = 1.0 / static_cast<double>(dim);
            const ComplexMatrix back = w * rho.matrix() + (1.0 - w) * sigma.matrix();
            const double rec = (back - DensityMatrix::maximally_mixed(m).matrix()).cwiseAbs().maxCoeff();
            const auto d = sigma.diagnostics();
            worst_reconstruction = std::max(worst_reconstruction, rec);
            worst_herm = std::max(worst_herm, d.hermitian_error);
            worst_trace = std::max(worst_trace, d.trace_error);
            min_eig = std::min(min_eig, d.min_eigenvalue);
        } catch (const std::invalid_argument &) {
            ok = false;
        }
    }
    ok = ok && worst_reconstruction <= 1e-9 && worst_herm <= 1e-9 && worst_trace <= 1e-9 && min_eig >= -1e-9;
    rep.json["mixing_decomposition"] = {{"samples", 100},
                                        {"max_reconstruction_error", worst_reconstruction},
                                        {"max_hermitian_error", worst_herm},
                                        {"max_trace_error", worst_trace},
                                        {"min_eigenvalue", min_eig},
                                        {"bound", 1e-9},
                                        {"pass", ok}};
    rep.record("mixing_decomposition", ok);
}

inline void lab_distinguishability(LabReport &rep, Rng &rng) {
    double worst_gap = 0.0, worst_excess = -1.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t m = 1 + k % 3;
        const std::size_t dim = std::size_t{1} << m;
        const auto a = random_density(m, 1 + uniform_below(rng, dim), rng);
        const auto b = random_density(m, 1 + uniform_below(rng, dim), rng);
        const double tn = trace_norm(a.matrix() - b.matrix());
        const auto h = helstrom_measurement(a, b);
        worst_gap = std::max(worst_gap, std::abs(h.achieved_distance - tn));
        for (int r = 0; r < 20; ++r) {
            const auto projs = random_projective_measurement(a.dim(), rng);
            const double d = l1_distance(outcome_distribution(a, projs), outcome_distribution(b, projs));
            worst_excess = std::max(worst_excess, d - tn);
        }
    }
    const bool ok = worst_gap <= 1e-9 && worst_excess <= 1e-9;
    rep.json["distinguishability"] = {{"pairs", 100},
                                      {"measurements_per_pair", 20},
                                      {"max_helstrom_gap", worst_gap},
                                      {"max_random_excess_over_trace_norm", worst_excess},
                                      {"bound", 1e-9},
                                      {"pass", ok}};
    rep.record("distinguishability", ok);
}

inline nlohmann::json to_json(const UnionBoundResult &r) {
    nlohmann::json in = nlohmann::json::array();
    for (const auto &i : r.inputs) {
        in.push_back({{"p_advice", i.p_advice},
                      {"p_mixed", i.p_mixed},
                      {"bound", i.p_advice / std::ldexp(1.0, static_cast<int>(r.advice_qubits))},
                      {"empirical_advice", i.empirical_advice},
                      {"empirical_mixed", i.empirical_mixed},
                      {"sigma", i.sigma},
                      {"exact_ok", i.exact_ok},
                      {"empirical_ok", i.empirical_ok}});
    }
    return {{"name", r.name}, {"S", r.advice_qubits}, {"p_advice", r.p_advice}, {"p_mixed", r.p_mixed},
            {"inputs", in}, {"pass", r.passed}};
}

}  // namespace detail

/// Answer bit [x_0 < x_1] handed over as advice; the body just outputs it.
inline AdvicedAlgorithm decision_bit_example() {
    AdvicedAlgorithm a;
    a.name = "decision_bit";
    a.advice_qubits = 1;
    a.advice = [](const SortInstance &x) {
        StateVector s(1);
        if (x.value(0) < x.value(1)) {
            apply_x(s, 0);
        }
        return s;
    };
    a.body = Circuit(1);
    a.output = {0, 1};
    a.success = [](const SortInstance &x, std::uint64_t v) { return v == (x.value(0) < x.value(1) ? 1u : 0u); };
    return a;
}

/// The body never touches the advice qubit; it looks for the minimum with a
/// single query on its own registers.
inline AdvicedAlgorithm unused_advice_example() {
    AdvicedAlgorithm a;
    a.name = "unused_advice";
    a.advice_qubits = 1;
    a.advice = [](const SortInstance &x) {
        StateVector s(1);
        apply_ry(s, 0, static_cast<double>(x.value(0)));
        return s;
    };
    const auto l = QueryLayout::make(4, 16, 0, 1);
    a.body = detail::uniform_single_query(l);
    a.output = l.index;
    a.success = [](const SortInstance &x, std::uint64_t v) { return v == RankOracle(x).argmin({0, x.size()}); };
    return a;
}

/// n = 4: the position of the minimum as two advice qubits, output directly.
inline AdvicedAlgorithm argmin_advice_example() {
    AdvicedAlgorithm a;
    a.name = "argmin_advice";
    a.advice_qubits = 2;
    a.advice = [](const SortInstance &x) {
        const auto i = RankOracle(x).argmin({0, x.size()});
        StateVector s(2);
        for (std::size_t q = 0; q < 2; ++q) {
            if ((i >> q) & 1) {
                apply_x(s, q);
            }
        }
        return s;
    };
    a.body = Circuit(2);
    a.output = {0, 2};
    a.success = [](const SortInstance &x, std::uint64_t v) { return v == RankOracle(x).argmin({0, x.size()}); };
    return a;
}

/// Random n = 4 algorithm: advice leans towards the minimum's position, the
/// body is a random query circuit whose index register starts with the
/// advice, and success means measuring the minimum's position.
inline AdvicedAlgorithm random_adviced_algorithm(std::size_t advice_qubits, std::size_t queries, Rng &rng) {
    AdvicedAlgorithm a;
    a.name = "random_S" + std::to_string(advice_qubits) + "_T" + std::to_string(queries);
    a.advice_qubits = advice_qubits;
    const double weight = 1.0 + 4.0 * uniform01(rng);
    const std::uint64_t shift = uniform_below(rng, std::uint64_t{1} << advice_qubits);
    a.advice = [advice_qubits, weight, shift](const SortInstance &x) {
        const std::uint64_t dim = std::uint64_t{1} << advice_qubits;
        const std::uint64_t hot = (RankOracle(x).argmin({0, x.size()}) + shift) % dim;
        std::vector<amplitude> amps(dim);
        double norm = 0.0;
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double phase = static_cast<double>(x.value(b % x.size()) * (b + 1));
            amps[b] = std::polar(b == hot ? weight : 1.0, phase);
            norm += std::norm(amps[b]);
        }
        for (auto &v : amps) {
            v /= std::sqrt(norm);
        }
        return StateVector::from_amplitudes(std::move(amps));
    };
    const auto l = QueryLayout::make(4, 16, 1);
    a.body = random_query_circuit(l, queries, rng);
    a.output = l.index;
    a.success = [](const SortInstance &x, std::uint64_t v) { return v == RankOracle(x).argmin({0, x.size()}); };
    return a;
}

namespace detail {

inline void lab_union_bound(LabReport &rep, const LabOptions &opt, Rng &rng) {
    std::vector<SortInstance> inputs;
    for (int k = 0; k < 8; ++k) {
        inputs.push_back(random_instance(4, rng, 16));
    }
    nlohmann::json examples = nlohmann::json::array();
    {
        const auto r = union_bound_experiment(decision_bit_example(), inputs, opt.union_trials, rng);
        const bool exact = std::abs(r.p_advice - 1.0) <= 1e-9 && std::abs(r.p_mixed - 0.5) <= 1e-9;
        auto j = to_json(r);
        j["expected_p_mixed"] = 0.5;
        j["reproduced"] = exact;
        examples.push_back(j);
        rep.record("union_bound.decision_bit", r.passed && exact);
    }
    {
        const auto r = union_bound_experiment(unused_advice_example(), inputs, opt.union_trials, rng);
        double gap = 0.0;
        for (const auto &i : r.inputs) {
            gap = std::max(gap, std::abs(i.p_mixed - i.p_advice));
        }
        auto j = to_json(r);
        j["max_abs_gap"] = gap;
        j["reproduced"] = gap <= 1e-9;
        examples.push_back(j);
        rep.record("union_bound.unused_advice", r.passed && gap <= 1e-9);
    }
    {
        const auto r = union_bound_experiment(argmin_advice_example(), inputs, opt.union_trials, rng);
        const bool exact = std::abs(r.p_advice - 1.0) <= 1e-9 && std::abs(r.p_mixed - 0.25) <= 1e-9;
        auto j = to_json(r);
        j["expected_p_mixed"] = 0.25;
        j["reproduced"] = exact;
        examples.push_back(j);
        rep.record("union_bound.argmin_advice", r.passed && exact);
    }
    nlohmann::json fixtures = nlohmann::json::array();
    for (std::size_t f = 0; f < 20; ++f) {
        const auto alg = random_adviced_algorithm(1 + f % 3, 1 + f % 2, rng);
        const auto r = union_bound_experiment(alg, inputs, opt.union_trials, rng);
        fixtures.push_back(to_json(r));
        rep.record("union_bound." + alg.name + "#" + std::to_string(f), r.passed);
    }
    rep.json["union_bound"] = {{"worked_examples", examples}, {"fixtures", fixtures}};
}

inline nlohmann::json scan_json(const std::string &name, const AdversaryScan &s, const LabOptions &opt, bool &ok) {
    nlohmann::json checks = nlohmann::json::array();
    ok = s.symmetry_error <= 1e-9;
    for (const auto &c : s.checks) {
        const bool pass = gated(static_cast<double>(c.good), static_cast<double>(s.n), static_cast<double>(s.queries),
                                c.alpha, opt.magnitude_constant);
        ok = ok && pass;
        checks.push_back({{"alpha", c.alpha},
                          {"good_positions", c.good},
                          {"stated_bound", c.stated_bound},
                          {"rigorous_bound", c.rigorous_bound},
                          {"stated_ok", c.stated_ok},
                          {"rigorous_ok", c.rigorous_ok},
                          {"pass", pass}});
    }
    return {{"name", name},
            {"n", s.n},
            {"T", s.queries},
            {"replacements", s.replacements},
            {"query_magnitude", s.query_magnitude},
            {"max_distance", s.max_distance},
            {"symmetry_error", s.symmetry_error},
            {"checks", checks},
            {"pass", ok}};
}

inline void lab_query_magnitude(LabReport &rep, const LabOptions &opt, Rng &rng) {
    const auto alphas = default_alphas();
    nlohmann::json rows = nlohmann::json::array();
    std::size_t stated_violations = 0, rigorous_violations = 0;
    auto run = [&](const std::string &name, const Circuit &body, const SortInstance &x) {
        const auto s = query_magnitude_scan(body, x, alphas);
        bool ok = false;
        rows.push_back(scan_json(name, s, opt, ok));
        for (const auto &c : s.checks) {
            stated_violations += c.stated_ok ? 0 : 1;
            rigorous_violations += c.rigorous_ok ? 0 : 1;
        }
        rep.record("query_magnitude." + name, ok);
    };
    for (std::size_t n : {4u, 8u}) {
        const auto l = QueryLayout::make(n, 16, 1);
        run("no_queries_n" + std::to_string(n), random_query_circuit(l, 0, rng), random_instance(n, rng, 16));
    }
    {
        const auto l = QueryLayout::make(4, 16, 0);
        run("uniform_single_query_n4", uniform_single_query(l), random_instance(4, rng, 16));
    }
    for (std::size_t n : {4u, 8u}) {
        for (std::size_t t = 1; t <= 4; ++t) {
            for (int rep_ = 0; rep_ < 3; ++rep_) {
                const auto l = QueryLayout::make(n, 16, 1);
                run("random_n" + std::to_string(n) + "_T" + std::to_string(t) + "#" + std::to_string(rep_),
                    random_query_circuit(l, t, rng), random_instance(n, rng, 16));
            }
        }
    }
    rep.json["query_magnitude"] = {{"scans", rows},
                                   {"magnitude_constant", opt.magnitude_constant},
                                   {"stated_violations", stated_violations},
                                   {"rigorous_violations", rigorous_violations}};
}

inline ConditionedEvent random_event(const QueryLayout &l, const Circuit &body, const SortInstance &x,
                                     std::uint64_t salt) {
    ConditionedEvent fe;
    fe.flag = {l.work.offset, 1};
    const auto p = marginal(final_state(body, x), fe.flag);
    fe.flag_outcome = p[1] > p[0] ? 1 : 0;
    fe.event = [salt](std::uint64_t b) { return (splitmix64(b ^ salt) & 1) == 1; };
    return fe;
}

inline void lab_conditioned(LabReport &rep, const LabOptions &opt, Rng &rng) {
    const auto alphas = default_alphas();
    nlohmann::json rows = nlohmann::json::array();
    std::size_t stated_violations = 0, rigorous_violations = 0;
    auto run = [&](const std::string &name, const Circuit &body, const SortInstance &x, const ConditionedEvent &fe) {
        const auto r = conditioned_adversary_check(body, x, fe, alphas);
        bool ok = true;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : r.checks) {
            const bool pass = gated(static_cast<double>(c.good), static_cast<double>(r.n),
                                    static_cast<double>(r.queries), c.alpha, opt.magnitude_constant);
            ok = ok && pass;
            stated_violations += c.stated_ok ? 0 : 1;
            rigorous_violations += c.rigorous_ok ? 0 : 1;
            checks.push_back({{"alpha", c.alpha},
                              {"joint_target", c.target},
                              {"good_positions", c.good},
                              {"stated_bound", c.stated_bound},
                              {"rigorous_bound", c.rigorous_bound},
                              {"stated_ok", c.stated_ok},
                              {"rigorous_ok", c.rigorous_ok},
                              {"pass", pass}});
        }
        rows.push_back({{"name", name},
                        {"n", r.n},
                        {"T", r.queries},
                        {"q_x", r.q_x},
                        {"p_x", r.p_x},
                        {"vacuous", r.vacuous},
                        {"min_joint", r.min_joint},
                        {"checks", checks},
                        {"pass", ok}});
        rep.record("conditioned." + name, ok);
    };
    {
        const auto l = QueryLayout::make(4, 16, 1);
        const auto body = random_query_circuit(l, 2, rng);
        const auto x = random_instance(4, rng, 16);
        ConditionedEvent whole;
        whole.flag = {0, 0};
        whole.event = [](std::uint64_t b) { return (b & 1) == 0; };
        run("full_outcome_space", body, x, whole);
        auto certain = random_event(l, body, x, 0);
        certain.event = [](std::uint64_t) { return true; };
        run("certain_event", body, x, certain);
    }
    for (int s = 0; s < 50; ++s) {
        const auto l = QueryLayout::make(4, 16, 1);
        const auto body = random_query_circuit(l, 2, rng);
        const auto x = random_instance(4, rng, 16);
        run("random_n4_T2#" + std::to_string(s), body, x, random_event(l, body, x, rng()));
    }
    for (std::size_t n : {4u, 6u}) {
        for (std::size_t t : {1u, 3u}) {
            for (int s = 0; s < 5; ++s) {
                const auto l = QueryLayout::make(n, 16, 1);
                const auto body = random_query_circuit(l, t, rng);
                const auto x = random_instance(n, rng, 16);
                run("random_n" + std::to_string(n) + "_T" + std::to_string(t) + "#" + std::to_string(s), body, x,
                    random_event(l, body, x, rng()));
            }
        }
    }
    rep.json["conditioned_adversary"] = {{"checks", rows},
                                         {"magnitude_constant", opt.magnitude_constant},
                                         {"stated_violations", stated_violations},
                                         {"rigorous_violations", rigorous_violations}};
}

inline void lab_slices(LabReport &rep, Rng &rng) {
    const std::size_t n = 64;
    const auto x = random_instance(n, rng);
    const auto run = quantum_sort(x, 48, rng);
    const auto sr = slice_report(run.report.counter, n, 1.0);
    std::size_t total = 0;
    for (auto o : sr.outputs) {
        total += o;
    }
    const auto expected_slices = static_cast<std::size_t>(
        std::ceil(static_cast<double>(run.report.queries) / sr.slice_length - 1e-12));
    const bool ok = total == n && sr.slices == expected_slices;
    rep.json["slices"] = {{"n", n},
                          {"S", 48},
                          {"delta", 1.0},
                          {"T", run.report.queries},
                          {"slices", sr.slices},
                          {"expected_slices", expected_slices},
                          {"outputs_total", total},
                          {"max_outputs_per_slice", sr.max_outputs},
                          {"mean_outputs_per_slice", sr.mean_outputs},
                          {"n_over_M", static_cast<double>(n) / static_cast<double>(sr.slices)},
                          {"pass", ok}};
    rep.record("slices", ok);
}

}  // namespace detail

/// Runs the whole matrix. The report mirrors every computed quantity next to
/// the bound it is checked against.
inline LabReport run_lab(const LabOptions &opt = {}) {
    LabReport rep;
    Rng rng(opt.seed);
    rep.json["seed"] = opt.seed;
    rep.json["version"] = QTSORT_VERSION;
    detail::lab_grover(rep, opt);
    detail::lab_mixed_preparation(rep);
    detail::lab_mix_decomposition(rep, rng);
    detail::lab_distinguishability(rep, rng);
    detail::lab_union_bound(rep, opt, rng);
    detail::lab_query_magnitude(rep, opt, rng);
    detail::lab_conditioned(rep, opt, rng);
    if (opt.include_slices) {
        detail::lab_slices(rep, rng);
    }
    rep.json["failures"] = rep.failures;
    rep.json["pass"] = rep.passed;
    return rep;
}

}  // namespace qtsort
