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

#include "qtsort/lab.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "qtsort/lab_report.hpp"

using namespace qtsort;

namespace {

std::vector<SortInstance> inputs_n4(std::uint64_t seed, int count = 6) {
    Rng rng(seed);
    std::vector<SortInstance> v;
    for (int k = 0; k < count; ++k) {
        v.push_back(random_instance(4, rng, 16));
    }
    return v;
}

Circuit uniform_query_n4(QueryLayout &l) {
    l = QueryLayout::make(4, 16, 0);
    Circuit c(l.num_qubits());
    c.h(l.index);
    c.query(l.index, l.value);
    return c;
}

}  // namespace

TEST(mixed_advice, reduced_state_is_maximally_mixed) {
    for (std::size_t s = 1; s <= 3; ++s) {
        const auto rho = reduced_density(mixed_advice_register(s), {0, s});
        EXPECT_NEAR((rho.matrix() - DensityMatrix::maximally_mixed(s).matrix()).cwiseAbs().maxCoeff(), 0.0, 1e-9);
    }
}

TEST(union_bound, decision_bit_drops_to_one_half) {
    Rng rng(1);
    const auto in = inputs_n4(2);
    const auto r = union_bound_experiment(decision_bit_example(), in, 4000, rng);
    EXPECT_NEAR(r.p_advice, 1.0, 1e-12);
    EXPECT_NEAR(r.p_mixed, 0.5, 1e-12);
    EXPECT_TRUE(r.passed);
}

TEST(union_bound, unused_advice_changes_nothing) {
    Rng rng(3);
    const auto in = inputs_n4(4);
    const auto r = union_bound_experiment(unused_advice_example(), in, 4000, rng);
    for (const auto &i : r.inputs) {
        EXPECT_NEAR(i.p_mixed, i.p_advice, 1e-12);
    }
    EXPECT_NEAR(r.p_advice, 0.25, 1e-12);  // one uniform query does not help locate the minimum
    EXPECT_TRUE(r.passed);
}

TEST(union_bound, argmin_advice_keeps_a_quarter) {
    Rng rng(5);
    const auto in = inputs_n4(6);
    const auto r = union_bound_experiment(argmin_advice_example(), in, 4000, rng);
    EXPECT_NEAR(r.p_advice, 1.0, 1e-12);
    EXPECT_NEAR(r.p_mixed, 0.25, 1e-12);
    EXPECT_TRUE(r.passed);
}

TEST(union_bound, holds_for_random_adviced_algorithms) {
    Rng rng(7);
    const auto in = inputs_n4(8);
    for (int f = 0; f < 20; ++f) {
        const auto alg = random_adviced_algorithm(1 + f % 3, 1 + f % 2, rng);
        const auto r = union_bound_experiment(alg, in, 2000, rng);
        const double scale = std::ldexp(1.0, -static_cast<int>(alg.advice_qubits));
        for (const auto &i : r.inputs) {
            EXPECT_GE(i.p_mixed, i.p_advice * scale - 1e-12) << alg.name;
        }
        EXPECT_TRUE(r.passed) << alg.name;
    }
}

TEST(union_bound, rejects_oversized_advice) {
    Rng rng(1);
    auto alg = decision_bit_example();
    alg.advice_qubits = 5;
    const auto in = inputs_n4(1, 1);
    EXPECT_THROW(union_bound_experiment(alg, in, 10, rng), std::invalid_argument);
}

TEST(query_magnitude, no_queries_means_no_dependence_on_the_input) {
    Rng rng(2);
    const auto l = QueryLayout::make(4, 16, 1);
    const auto body = random_query_circuit(l, 0, rng);
    const auto x = random_instance(4, rng, 16);
    const auto alphas = default_alphas();
    const auto scan = query_magnitude_scan(body, x, alphas);
    for (double d : scan.max_distance) {
        EXPECT_NEAR(d, 0.0, 1e-12);
    }
    for (const auto &c : scan.checks) {
        EXPECT_EQ(c.good, 4u);
    }
}

TEST(query_magnitude, one_uniform_query_spreads_a_quarter_on_each_position) {
    QueryLayout l;
    const auto body = uniform_query_n4(l);
    const auto x = random_instance_seeded(4, 3);
    const std::vector<double> alphas{0.1, 0.5, 1.0};
    const auto scan = query_magnitude_scan(body, x, alphas);
    ASSERT_EQ(scan.query_magnitude.size(), 4u);
    for (double m : scan.query_magnitude) {
        EXPECT_NEAR(m, 0.25, 1e-12);
    }
    // x' differs from x in one of four equally weighted branches: overlap 3/4
    for (double d : scan.max_distance) {
        EXPECT_NEAR(d, 2.0 * std::sqrt(1.0 - 9.0 / 16.0), 1e-12);
    }
    EXPECT_EQ(scan.replacements, 4u * 12u);
    EXPECT_LE(scan.symmetry_error, 1e-9);
}

TEST(query_magnitude, textbook_constant_fails_where_rigorous_one_holds) {
    QueryLayout l;
    const auto body = uniform_query_n4(l);
    const auto x = random_instance_seeded(4, 3);
    const std::vector<double> alphas{0.6};
    const auto c = query_magnitude_scan(body, x, alphas).checks.at(0);
    // every position moves the state by sqrt(7)/2 > 2 * 0.6
    EXPECT_EQ(c.good, 0u);
    EXPECT_NEAR(c.stated_bound, 4.0 - 1.0 / 0.36, 1e-12);
    EXPECT_FALSE(c.stated_ok);
    EXPECT_TRUE(c.rigorous_ok);
}

TEST(query_magnitude, large_alpha_admits_every_position) {
    QueryLayout l;
    const auto body = uniform_query_n4(l);
    const auto x = random_instance_seeded(4, 3);
    const std::vector<double> alphas{2.0};  // sqrt(n) * T
    const auto c = query_magnitude_scan(body, x, alphas).checks.at(0);
    EXPECT_NEAR(c.stated_bound, 4.0 - 0.25, 1e-12);
    EXPECT_LT(c.rigorous_bound, 4.0);
    EXPECT_EQ(c.good, 4u);
    EXPECT_TRUE(c.stated_ok);
}

TEST(query_magnitude, rigorous_bound_holds_on_random_circuits) {
    Rng rng(31);
    const auto alphas = default_alphas();
    for (std::size_t n : {4u, 8u}) {
        for (std::size_t t = 1; t <= 4; ++t) {
            for (int rep = 0; rep < 2; ++rep) {
                const auto l = QueryLayout::make(n, 16, 1);
                const auto body = random_query_circuit(l, t, rng);
                const auto x = random_instance(n, rng, 16);
                const auto scan = query_magnitude_scan(body, x, alphas);
                EXPECT_LE(scan.symmetry_error, 1e-9);
                double total = 0.0;
                for (double m : scan.query_magnitude) {
                    total += m;
                }
                EXPECT_LE(total, static_cast<double>(t) + 1e-9);
                for (const auto &c : scan.checks) {
                    EXPECT_TRUE(c.rigorous_ok) << "n=" << n << " T=" << t << " alpha=" << c.alpha;
                }
            }
        }
    }
}

TEST(query_magnitude, distance_per_position_is_bounded_by_its_magnitude) {
    // ||psi_T - psi'_T|| <= 2 sum_t sqrt(m_i^t) <= 2 sqrt(T m_i), and the pure
    // trace distance is at most twice the Euclidean distance.
    Rng rng(41);
    for (std::size_t t = 1; t <= 3; ++t) {
        const auto l = QueryLayout::make(4, 16, 1);
        const auto body = random_query_circuit(l, t, rng);
        const auto x = random_instance(4, rng, 16);
        const std::vector<double> none;
        const auto scan = query_magnitude_scan(body, x, none);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_LE(scan.max_distance[i], 4.0 * std::sqrt(static_cast<double>(t) * scan.query_magnitude[i]) + 1e-9);
        }
    }
}

TEST(query_magnitude, enforces_size_limits) {
    Rng rng(1);
    const auto l = QueryLayout::make(16, 256, 0);
    const auto body = random_query_circuit(l, 1, rng);
    const std::vector<double> alphas{1.0};
    EXPECT_THROW(query_magnitude_scan(body, random_instance(16, rng), alphas), std::invalid_argument);
}

TEST(conditioned_adversary, full_outcome_space_reduces_to_the_event) {
    Rng rng(5);
    const auto l = QueryLayout::make(4, 16, 1);
    const auto body = random_query_circuit(l, 2, rng);
    const auto x = random_instance(4, rng, 16);
    ConditionedEvent fe;
    fe.flag = {0, 0};
    fe.event = [](std::uint64_t b) { return (b & 1) == 0; };
    const std::vector<double> alphas{0.5};
    const auto r = conditioned_adversary_check(body, x, fe, alphas);
    EXPECT_NEAR(r.q_x, 1.0, 1e-12);
    const auto p = marginal(final_state(body, x), Register{0, 1});
    EXPECT_NEAR(r.p_x, p[0], 1e-12);
}

TEST(conditioned_adversary, certain_event_targets_q_times_one_minus_alpha) {
    Rng rng(6);
    const auto l = QueryLayout::make(4, 16, 1);
    const auto body = random_query_circuit(l, 2, rng);
    const auto x = random_instance(4, rng, 16);
    ConditionedEvent fe;
    fe.flag = {l.work.offset, 1};
    fe.flag_outcome = 1;
    fe.event = [](std::uint64_t) { return true; };
    const std::vector<double> alphas{0.25};
    const auto r = conditioned_adversary_check(body, x, fe, alphas);
    EXPECT_NEAR(r.p_x, 1.0, 1e-12);
    EXPECT_NEAR(r.checks.at(0).target, r.q_x * 0.75, 1e-12);
}

TEST(conditioned_adversary, random_two_query_circuits_on_four_items) {
    Rng rng(51);
    const auto alphas = default_alphas();
    for (int seed = 0; seed < 50; ++seed) {
        const auto l = QueryLayout::make(4, 16, 1);
        const auto body = random_query_circuit(l, 2, rng);
        const auto x = random_instance(4, rng, 16);
        ConditionedEvent fe;
        fe.flag = {l.work.offset, 1};
        const auto p = marginal(final_state(body, x), fe.flag);
        fe.flag_outcome = p[1] > p[0] ? 1 : 0;
        const std::uint64_t salt = rng();
        fe.event = [salt](std::uint64_t b) { return (splitmix64(b ^ salt) & 1) == 1; };
        const auto r = conditioned_adversary_check(body, x, fe, alphas);
        ASSERT_FALSE(r.vacuous);
        for (const auto &c : r.checks) {
            EXPECT_TRUE(c.stated_ok) << "seed " << seed << " alpha " << c.alpha;
        }
    }
}

TEST(conditioned_adversary, impossible_flag_is_vacuous) {
    const SortInstance x({1, 2, 3, 4}, 16);
    Circuit body(8);
    ConditionedEvent fe;
    fe.flag = {7, 1};
    fe.flag_outcome = 1;
    fe.event = [](std::uint64_t) { return true; };
    const std::vector<double> alphas{0.5};
    EXPECT_TRUE(conditioned_adversary_check(body, x, fe, alphas).vacuous);
}

TEST(slice_report, counts_outputs_per_slice) {
    QueryCounter c;
    c.add(3);
    c.mark_slice("1");
    c.add(2);
    c.mark_slice("2");
    c.add(5);
    c.mark_slice("3");
    const auto r = slice_report(c, 4, 1.0);  // slices of 2 queries
    EXPECT_EQ(r.slices, 5u);
    EXPECT_EQ(r.outputs, (std::vector<std::size_t>{0, 1, 1, 0, 1}));
    EXPECT_EQ(r.queries, (std::vector<std::uint64_t>{2, 2, 2, 2, 2}));
    EXPECT_EQ(r.max_outputs, 1u);
}

TEST(slice_report, rejects_slices_shorter_than_one_query) {
    QueryCounter c;
    c.add(5);
    EXPECT_THROW(slice_report(c, 4, 0.25), std::invalid_argument);
}

TEST(slice_report, conserves_outputs_on_a_sort_run) {
    const auto x = random_instance_seeded(64, 1);
    Rng rng(2);
    const auto run = quantum_sort(x, 48, rng);
    const auto r = slice_report(run.report.counter, 64, 1.0);
    EXPECT_EQ(r.slices, static_cast<std::size_t>(std::ceil(static_cast<double>(run.report.queries) / 8.0)));
    std::size_t total = 0;
    std::uint64_t q = 0;
    for (std::size_t s = 0; s < r.slices; ++s) {
        total += r.outputs[s];
        q += r.queries[s];
    }
    EXPECT_EQ(total, 64u);
    EXPECT_EQ(q, run.report.queries);
    EXPECT_NEAR(r.mean_outputs, 64.0 / static_cast<double>(r.slices), 1e-12);
}

TEST(grover_fixture, correct_diffusion_matches_the_formula) {
    for (std::size_t t = 0; t <= 3; ++t) {
        EXPECT_NEAR(grover_success_probability(4, 5, t), grover_analytic(16, 1, t), 1e-12);
    }
}

TEST(grover_fixture, flipped_sign_breaks_agreement) {
    EXPECT_GT(std::abs(grover_success_probability(4, 5, 3, DiffusionMode::flipped_sign) - grover_analytic(16, 1, 3)),
              0.1);
}

TEST(lab, mutation_is_caught) {
    LabOptions opt;
    opt.diffusion = DiffusionMode::flipped_sign;
    opt.magnitude_constant = 4.0;
    opt.include_slices = false;
    opt.union_trials = 200;
    const auto rep = run_lab(opt);
    EXPECT_FALSE(rep.passed);
    EXPECT_NE(std::find(rep.failures.begin(), rep.failures.end(), "grover_analytic"), rep.failures.end());
}

TEST(lab, rigorous_constant_passes_the_whole_matrix) {
    LabOptions opt;
    opt.magnitude_constant = 4.0;
    opt.include_slices = false;
    const auto rep = run_lab(opt);
    EXPECT_TRUE(rep.passed) << rep.json["failures"].dump();
    EXPECT_EQ(rep.json["conditioned_adversary"]["stated_violations"], 0);
    EXPECT_EQ(rep.json["query_magnitude"]["rigorous_violations"], 0);
}

TEST(lab, textbook_constant_fails_only_on_position_set_scans) {
    LabOptions opt;
    opt.include_slices = false;
    const auto rep = run_lab(opt);
    EXPECT_FALSE(rep.passed);
    for (const auto &f : rep.failures) {
        EXPECT_EQ(f.rfind("query_magnitude.", 0), 0u) << f;
    }
    EXPECT_GT(rep.json["query_magnitude"]["stated_violations"].get<int>(), 0);
}

TEST(lab, report_pairs_every_bound_with_its_measurement) {
    LabOptions opt;
    opt.include_slices = false;
    opt.union_trials = 200;
    const auto rep = run_lab(opt);
    for (const auto &scan : rep.json["query_magnitude"]["scans"]) {
        for (const auto &c : scan["checks"]) {
            EXPECT_TRUE(c.contains("good_positions"));
            EXPECT_TRUE(c.contains("stated_bound"));
            EXPECT_TRUE(c.contains("rigorous_bound"));
        }
    }
    for (const auto &f : rep.json["union_bound"]["fixtures"]) {
        for (const auto &i : f["inputs"]) {
            EXPECT_TRUE(i.contains("p_mixed"));
            EXPECT_TRUE(i.contains("bound"));
        }
    }
}
