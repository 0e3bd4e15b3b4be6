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

#include "qtsort/density_matrix.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace qtsort;

namespace {

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

StateVector basis_state(std::size_t q, std::uint64_t k) {
    StateVector s(q);
    for (std::size_t b = 0; b < q; ++b) {
        if ((k >> b) & 1) {
            apply_x(s, b);
        }
    }
    return s;
}

}  // namespace

TEST(density_matrix, construction_validates) {
    ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{bad}, std::invalid_argument);
    ComplexMatrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);
    ComplexMatrix skew(2, 2);
    skew << 0.5, 0.3, 0.1, 0.5;
    EXPECT_THROW(DensityMatrix{skew}, std::invalid_argument);
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(density_matrix, maximally_mixed_is_scaled_identity) {
    const auto m = DensityMatrix::maximally_mixed(2);
    EXPECT_NEAR(max_abs(m.matrix() - ComplexMatrix::Identity(4, 4) / 4.0), 0.0, 1e-15);
}

TEST(density_matrix, ensemble_sums_projectors) {
    std::vector<std::pair<double, StateVector>> ens{{0.25, basis_state(1, 0)}, {0.75, basis_state(1, 1)}};
    const auto rho = density_from_ensemble(ens);
    EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.25, 1e-15);
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.75, 1e-15);
    std::vector<std::pair<double, StateVector>> short_ens{{0.5, basis_state(1, 0)}};
    EXPECT_THROW(density_from_ensemble(short_ens), std::invalid_argument);
}

TEST(density_matrix, trace_norm_of_known_matrices) {
    ComplexMatrix d(2, 2);
    d << 1, 0, 0, -1;
    EXPECT_NEAR(trace_norm(d), 2.0, 1e-12);
    ComplexMatrix nilpotent(2, 2);
    nilpotent << 0, 1, 0, 0;
    EXPECT_NEAR(trace_norm(nilpotent), 1.0, 1e-12);
}

TEST(density_matrix, helstrom_separates_orthogonal_states_perfectly) {
    const auto a = DensityMatrix::pure(basis_state(1, 0));
    const auto b = DensityMatrix::pure(basis_state(1, 1));
    EXPECT_NEAR(helstrom_measurement(a, b).achieved_distance, 2.0, 1e-12);
}

TEST(density_matrix, helstrom_on_zero_and_plus_reaches_root_two) {
    StateVector plus(1);
    apply_hadamard(plus, 0);
    const auto a = DensityMatrix::pure(basis_state(1, 0));
    const auto b = DensityMatrix::pure(plus);
    // 2 sqrt(1 - |<0|+>|^2) = sqrt(2).
    EXPECT_NEAR(trace_norm(a.matrix() - b.matrix()), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(helstrom_measurement(a, b).achieved_distance, std::sqrt(2.0), 1e-12);
}

TEST(density_matrix, helstrom_attains_trace_norm_and_random_measurements_do_not_beat_it) {
    Rng rng(21);
    for (int pair = 0; pair < 100; ++pair) {
        const std::size_t m = 1 + pair % 3;
        const std::size_t dim = std::size_t{1} << m;
        const auto a = random_density(m, 1 + uniform_below(rng, dim), rng);
        const auto b = random_density(m, 1 + uniform_below(rng, dim), rng);
        const double tn = trace_norm(a.matrix() - b.matrix());
        const auto h = helstrom_measurement(a, b);
        EXPECT_NEAR(h.achieved_distance, tn, 1e-9);
        EXPECT_NEAR(max_abs(h.positive + h.negative - ComplexMatrix::Identity(a.dim(), a.dim())), 0.0, 1e-12);
        for (int r = 0; r < 20; ++r) {
            const auto projs = random_projective_measurement(a.dim(), rng);
            const double d = l1_distance(outcome_distribution(a, projs), outcome_distribution(b, projs));
            EXPECT_LE(d, tn + 1e-9);
        }
    }
}

TEST(density_matrix, random_projective_measurement_is_complete) {
    Rng rng(4);
    const auto projs = random_projective_measurement(8, rng);
    ASSERT_EQ(projs.size(), 8u);
    ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
    for (const auto &p : projs) {
        sum += p;
        EXPECT_NEAR(max_abs(p * p - p), 0.0, 1e-12);
    }
    EXPECT_NEAR(max_abs(sum - ComplexMatrix::Identity(8, 8)), 0.0, 1e-12);
}

TEST(density_matrix, mixing_decomposition_of_a_basis_state) {
    const auto sigma = mix_decompose(DensityMatrix::pure(basis_state(1, 0)), 1);
    EXPECT_NEAR(sigma.matrix()(0, 0).real(), 0.0, 1e-15);
    EXPECT_NEAR(sigma.matrix()(1, 1).real(), 1.0, 1e-15);
}

TEST(density_matrix, mixing_decomposition_reconstructs_the_mixed_state) {
    Rng rng(8);
    for (int k = 0; k < 100; ++k) {
        const std::size_t m = 1 + k % 4;
        const std::size_t dim = std::size_t{1} << m;
        const auto rho = random_density(m, 1 + uniform_below(rng, dim), rng);
        const auto sigma = mix_decompose(rho, m);
        const auto d = sigma.diagnostics();
        EXPECT_LE(d.hermitian_error, 1e-9);
        EXPECT_LE(d.trace_error, 1e-9);
        EXPECT_GE(d.min_eigenvalue, -1e-9);
        const double w = 1.0 / static_cast<double>(dim);
        const ComplexMatrix back = w * rho.matrix() + (1.0 - w) * sigma.matrix();
        EXPECT_NEAR(max_abs(back - DensityMatrix::maximally_mixed(m).matrix()), 0.0, 1e-9);
    }
}

TEST(density_matrix, mixing_decomposition_rejects_bad_arguments) {
    const auto rho = DensityMatrix::maximally_mixed(1);
    EXPECT_THROW(mix_decompose(rho, 0), std::invalid_argument);
    EXPECT_THROW(mix_decompose(rho, 2), std::invalid_argument);
}

TEST(density_matrix, reduced_state_of_a_bell_pair_is_maximally_mixed) {
    StateVector s(2);
    apply_hadamard(s, 0);
    apply_cnot(s, 0, 1);
    const auto r = reduced_density(s, Register{0, 1});
    EXPECT_NEAR(max_abs(r.matrix() - DensityMatrix::maximally_mixed(1).matrix()), 0.0, 1e-15);
}

TEST(density_matrix, reduced_state_of_a_product_is_the_factor) {
    Rng rng(2);
    const auto a = random_state(2, rng);
    const auto b = random_state(1, rng);
    const auto r = reduced_density(tensor(a, b), Register{0, 2});
    EXPECT_NEAR(max_abs(r.matrix() - DensityMatrix::pure(a).matrix()), 0.0, 1e-12);
    const auto rb = reduced_density(tensor(a, b), Register{2, 1});
    EXPECT_NEAR(max_abs(rb.matrix() - DensityMatrix::pure(b).matrix()), 0.0, 1e-12);
}

TEST(density_matrix, pure_trace_distance_agrees_with_trace_norm) {
    Rng rng(12);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_state(3, rng);
        const auto b = random_state(3, rng);
        const double tn = trace_norm(DensityMatrix::pure(a).matrix() - DensityMatrix::pure(b).matrix());
        EXPECT_NEAR(pure_trace_distance(a, b), tn, 1e-9);
    }
}
