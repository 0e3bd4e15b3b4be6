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

#include "qtsort/state_vector.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace qtsort;

namespace {

constexpr double kTol = 1e-12;

void expect_amp(const StateVector &s, std::size_t k, amplitude want) {
    EXPECT_NEAR(s[k].real(), want.real(), kTol) << "basis " << k;
    EXPECT_NEAR(s[k].imag(), want.imag(), kTol) << "basis " << k;
}

}  // namespace

TEST(state_vector, starts_in_all_zero_basis_state) {
    StateVector s(3);
    EXPECT_EQ(s.dim(), 8u);
    expect_amp(s, 0, 1.0);
    for (std::size_t k = 1; k < 8; ++k) {
        expect_amp(s, k, 0.0);
    }
}

TEST(state_vector, rejects_zero_and_oversized_widths) {
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(max_qubits() + 1), capacity_error);
}

TEST(state_vector, qubit_k_is_bit_k_of_the_basis_index) {
    StateVector s(3);
    apply_x(s, 1);
    expect_amp(s, 2, 1.0);
    apply_x(s, 2);
    expect_amp(s, 6, 1.0);
}

TEST(state_vector, hadamard_gives_equal_superposition) {
    StateVector s(1);
    apply_hadamard(s, 0);
    expect_amp(s, 0, 1.0 / std::sqrt(2.0));
    expect_amp(s, 1, 1.0 / std::sqrt(2.0));
}

TEST(state_vector, hadamard_then_cnot_makes_a_bell_pair) {
    StateVector s(2);
    apply_hadamard(s, 0);
    apply_cnot(s, 0, 1);
    expect_amp(s, 0, 1.0 / std::sqrt(2.0));
    expect_amp(s, 3, 1.0 / std::sqrt(2.0));
    expect_amp(s, 1, 0.0);
    expect_amp(s, 2, 0.0);
}

TEST(state_vector, cnot_needs_distinct_qubits) {
    StateVector s(2);
    EXPECT_THROW(apply_cnot(s, 1, 1), std::invalid_argument);
    EXPECT_THROW(apply_x(s, 2), std::out_of_range);
}

TEST(state_vector, cz_and_z_flip_phases) {
    StateVector s(2);
    apply_hadamard(s, Register{0, 2});
    apply_cz(s, 0, 1);
    expect_amp(s, 3, -0.5);
    apply_z(s, 0);
    expect_amp(s, 1, -0.5);
    expect_amp(s, 3, 0.5);
}

TEST(state_vector, rotations_match_their_matrices) {
    StateVector s(1);
    apply_ry(s, 0, std::numbers::pi / 3);
    expect_amp(s, 0, std::cos(std::numbers::pi / 6));
    expect_amp(s, 1, std::sin(std::numbers::pi / 6));
    StateVector t(1);
    apply_hadamard(t, 0);
    apply_rz(t, 0, std::numbers::pi);
    EXPECT_NEAR(std::norm(inner_product(t, t)), 1.0, kTol);
    EXPECT_NEAR(std::abs(t[0] / t[1] + 1.0), 0.0, 1e-9);
}

TEST(state_vector, random_gate_sequences_preserve_norm) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_state(5, rng);
        for (int g = 0; g < 40; ++g) {
            const std::size_t a = uniform_below(rng, 5), b = (a + 1 + uniform_below(rng, 4)) % 5;
            switch (uniform_below(rng, 7)) {
                case 0: apply_hadamard(s, a); break;
                case 1: apply_x(s, a); break;
                case 2: apply_z(s, a); break;
                case 3: apply_ry(s, a, uniform01(rng) * 6.0); break;
                case 4: apply_rz(s, a, uniform01(rng) * 6.0); break;
                case 5: apply_cnot(s, a, b); break;
                default: apply_diffusion(s, Register{0, 1 + a}); break;
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(state_vector, diffusion_inverts_about_the_mean) {
    StateVector s(2);
    apply_diffusion(s, Register{0, 2});
    expect_amp(s, 0, -0.5);
    expect_amp(s, 1, 0.5);
    expect_amp(s, 2, 0.5);
    expect_amp(s, 3, 0.5);

    StateVector u(3);
    apply_hadamard(u, Register{0, 3});
    const auto before = u;
    apply_diffusion(u, Register{0, 3});
    EXPECT_NEAR(std::norm(inner_product(before, u)), 1.0, kTol);
}

TEST(state_vector, diffusion_acts_per_setting_of_other_qubits) {
    StateVector s(2);
    apply_x(s, 1);
    apply_diffusion(s, Register{0, 1});
    expect_amp(s, 2, 0.0);
    expect_amp(s, 3, 1.0);
}

TEST(state_vector, grover_rounds_follow_the_rotation_formula) {
    const double theta = std::asin(0.25);
    for (std::size_t t = 0; t <= 4; ++t) {
        StateVector s(4);
        apply_hadamard(s, Register{0, 4});
        for (std::size_t r = 0; r < t; ++r) {
            apply_phase_flip(s, [](std::uint64_t k) { return k == 9; });
            apply_diffusion(s, Register{0, 4});
        }
        const double expected = std::pow(std::sin((2.0 * static_cast<double>(t) + 1.0) * theta), 2);
        EXPECT_NEAR(s.probability(9), expected, 1e-12) << "t=" << t;
    }
}

TEST(state_vector, marginal_sums_to_one_and_matches_amplitudes) {
    Rng rng(3);
    const auto s = random_state(4, rng);
    const auto p = marginal(s, Register{1, 2});
    double total = 0.0;
    for (double v : p) {
        total += v;
    }
    EXPECT_NEAR(total, 1.0, kTol);
    double p2 = 0.0;
    for (std::uint64_t k = 0; k < 16; ++k) {
        if (((k >> 1) & 3) == 2) {
            p2 += s.probability(k);
        }
    }
    EXPECT_NEAR(p[2], p2, kTol);
}

TEST(state_vector, measurement_collapses_and_repeats) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_state(3, rng);
        const auto m = measure(s, Register{0, 2}, rng);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        const auto again = measure(s, Register{0, 2}, rng);
        EXPECT_EQ(m.outcome, again.outcome);
        EXPECT_NEAR(again.probability, 1.0, 1e-10);
    }
}

TEST(state_vector, measurement_frequencies_follow_the_born_rule) {
    Rng rng(9);
    StateVector base(1);
    apply_ry(base, 0, 2.0 * std::asin(std::sqrt(0.3)));
    int ones = 0;
    const int shots = 20000;
    for (int k = 0; k < shots; ++k) {
        auto s = base;
        ones += measure(s, Register{0, 1}, rng).outcome == 1 ? 1 : 0;
    }
    const double sigma = std::sqrt(0.3 * 0.7 / shots);
    EXPECT_NEAR(static_cast<double>(ones) / shots, 0.3, 4 * sigma);
}

TEST(state_vector, register_extract_and_deposit_round_trip) {
    const Register r{3, 4};
    for (std::uint64_t v = 0; v < 16; ++v) {
        const std::uint64_t b = r.deposit(0b1000'0000'0101, v);
        EXPECT_EQ(r.extract(b), v);
        EXPECT_EQ(b & ~r.mask(), 0b1000'0000'0101u);
    }
    EXPECT_TRUE(overlaps(Register{0, 3}, Register{2, 2}));
    EXPECT_FALSE(overlaps(Register{0, 2}, Register{2, 2}));
    EXPECT_FALSE(overlaps(Register{0, 0}, Register{0, 2}));
}

TEST(state_vector, register_spec_lays_out_disjoint_ranges) {
    RegisterSpec spec;
    const auto a = spec.add("index", 3);
    const auto b = spec.add("value", 5);
    EXPECT_EQ(a.offset, 0u);
    EXPECT_EQ(b.offset, 3u);
    EXPECT_EQ(spec.total_qubits(), 8u);
    EXPECT_TRUE(spec.valid_for(8));
    EXPECT_FALSE(spec.valid_for(7));
    EXPECT_EQ(spec.get("value").width, 5u);
    EXPECT_THROW(spec.get("missing"), std::out_of_range);
}

TEST(state_vector, from_amplitudes_checks_norm_and_size) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
    EXPECT_NO_THROW(StateVector::from_amplitudes({0.6, 0.8}));
}

TEST(state_vector, tensor_places_first_factor_low) {
    StateVector a(1), b(1);
    apply_x(b, 0);
    const auto t = tensor(a, b);
    expect_amp(t, 2, 1.0);
}

TEST(state_vector, pure_trace_distance_extremes) {
    StateVector a(1), b(1);
    apply_x(b, 0);
    EXPECT_NEAR(pure_trace_distance(a, b), 2.0, kTol);
    EXPECT_NEAR(pure_trace_distance(a, a), 0.0, kTol);
    StateVector plus(1);
    apply_hadamard(plus, 0);
    EXPECT_NEAR(pure_trace_distance(a, plus), std::sqrt(2.0), kTol);
}

TEST(common, ceil_log2_and_seed_splitting) {
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(5), 3u);
    EXPECT_EQ(ceil_log2(64), 6u);
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
    EXPECT_NE(derive_seed(7, 3), derive_seed(7, 4));
    EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        EXPECT_LT(uniform_below(rng, 7), 7u);
        const double u = uniform01(rng);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}
