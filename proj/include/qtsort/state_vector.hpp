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
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtsort/common.hpp"

namespace qtsort {

using amplitude = std::complex<double>;

/// A contiguous range of qubits. Qubit k is bit k of the basis index, so a
/// register's value is the integer formed by bits [offset, offset + width).
struct Register {
    std::size_t offset = 0;
    std::size_t width = 0;

    std::uint64_t mask() const {
        return width == 0 ? 0 : (((std::uint64_t{1} << width) - 1) << offset);
    }
    std::uint64_t dim() const { return std::uint64_t{1} << width; }
    std::uint64_t extract(std::uint64_t basis) const { return (basis & mask()) >> offset; }
    std::uint64_t deposit(std::uint64_t basis, std::uint64_t value) const {
        return (basis & ~mask()) | ((value << offset) & mask());
    }
    std::size_t end() const { return offset + width; }
    bool contains(std::size_t qubit) const { return qubit >= offset && qubit < end(); }
};

inline bool overlaps(const Register &a, const Register &b) {
    return a.width > 0 && b.width > 0 && a.offset < b.end() && b.offset < a.end();
}

/// Named, disjoint qubit ranges laid out low to high.
class RegisterSpec {
  public:
    Register add(std::string name, std::size_t width) {
        Register r{total_, width};
        total_ += width;
        names_.push_back(std::move(name));
        regs_.push_back(r);
        return r;
    }

    const Register &get(const std::string &name) const {
        for (std::size_t k = 0; k < names_.size(); ++k) {
            if (names_[k] == name) {
                return regs_[k];
            }
        }
        throw std::out_of_range("no register named '" + name + "'");
    }

    std::size_t total_qubits() const { return total_; }
    std::span<const Register> registers() const { return regs_; }

    /// Disjoint and inside `num_qubits`.
    bool valid_for(std::size_t num_qubits) const {
        for (std::size_t a = 0; a < regs_.size(); ++a) {
            if (regs_[a].end() > num_qubits) {
                return false;
            }
            for (std::size_t b = a + 1; b < regs_.size(); ++b) {
                if (overlaps(regs_[a], regs_[b])) {
                    return false;
                }
            }
        }
        return true;
    }

  private:
    std::size_t total_ = 0;
    std::vector<std::string> names_;
    std::vector<Register> regs_;
};

/// Dense amplitude vector over 2^q basis states.
class StateVector {
  public:
    /// Blank state |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits == 0) {
            throw std::invalid_argument("a state needs at least one qubit");
        }
        if (num_qubits > max_qubits()) {
            throw capacity_error("state of " + std::to_string(num_qubits) +
                                 " qubits exceeds the cap of " + std::to_string(max_qubits()));
        }
        amps_.assign(std::size_t{1} << num_qubits, amplitude{0.0, 0.0});
        amps_[0] = 1.0;
    }

    static StateVector from_amplitudes(std::vector<amplitude> amps) {
        if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
            throw std::invalid_argument("amplitude count must be a power of two >= 2");
        }
        StateVector s(static_cast<std::size_t>(std::countr_zero(amps.size())));
        s.amps_ = std::move(amps);
        if (std::abs(s.norm_squared() - 1.0) > numeric_tolerance()) {
            throw std::invalid_argument("amplitudes are not unit norm");
        }
        return s;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const amplitude> amplitudes() const { return amps_; }
    std::span<amplitude> amplitudes() { return amps_; }
    const amplitude &operator[](std::size_t k) const { return amps_[k]; }
    amplitude &operator[](std::size_t k) { return amps_[k]; }

    double norm_squared() const {
        double s = 0.0;
        for (const auto &a : amps_) {
            s += std::norm(a);
        }
        return s;
    }

    double probability(std::uint64_t basis) const { return std::norm(amps_.at(basis)); }

    void check_qubit(std::size_t q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits_) + "-qubit state");
        }
    }

    void check_register(const Register &r) const {
        if (r.end() > num_qubits_) {
            throw std::out_of_range("register exceeds state width");
        }
    }

  private:
    std::size_t num_qubits_;
    std::vector<amplitude> amps_;
};

inline StateVector new_state(std::size_t num_qubits) { return StateVector(num_qubits); }

/// Applies a 2x2 matrix [[a, b], [c, d]] to one qubit.
inline void apply_single_qubit(StateVector &s, std::size_t qubit, amplitude a, amplitude b,
                               amplitude c, amplitude d) {
    s.check_qubit(qubit);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & bit) {
            continue;
        }
        const amplitude lo = amps[k];
        const amplitude hi = amps[k | bit];
        amps[k] = a * lo + b * hi;
        amps[k | bit] = c * lo + d * hi;
    }
}

inline void apply_hadamard(StateVector &s, std::size_t qubit) {
    const double h = std::numbers::sqrt2 / 2.0;
    apply_single_qubit(s, qubit, h, h, h, -h);
}

inline void apply_hadamard(StateVector &s, const Register &r) {
    for (std::size_t q = r.offset; q < r.end(); ++q) {
        apply_hadamard(s, q);
    }
}

inline void apply_x(StateVector &s, std::size_t qubit) { apply_single_qubit(s, qubit, 0, 1, 1, 0); }

inline void apply_z(StateVector &s, std::size_t qubit) { apply_single_qubit(s, qubit, 1, 0, 0, -1); }

inline void apply_ry(StateVector &s, std::size_t qubit, double theta) {
    const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    apply_single_qubit(s, qubit, c, -sn, sn, c);
}

inline void apply_rz(StateVector &s, std::size_t qubit, double theta) {
    apply_single_qubit(s, qubit, std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
}

inline void apply_cnot(StateVector &s, std::size_t control, std::size_t target) {
    s.check_qubit(control);
    s.check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    const std::uint64_t cb = std::uint64_t{1} << control, tb = std::uint64_t{1} << target;
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & cb) && !(k & tb)) {
            std::swap(amps[k], amps[k | tb]);
        }
    }
}

inline void apply_cz(StateVector &s, std::size_t a, std::size_t b) {
    s.check_qubit(a);
    s.check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("CZ qubits must differ");
    }
    const std::uint64_t m = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & m) == m) {
            amps[k] = -amps[k];
        }
    }
}

/// Negates every amplitude whose basis index satisfies `marked`.
template <class Pred>
void apply_phase_flip(StateVector &s, Pred &&marked) {
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (marked(k)) {
            amps[k] = -amps[k];
        }
    }
}

/// Inversion about the mean on `reg`, independently for every setting of the
/// qubits outside it: a_v <- 2 * mean - a_v.
inline void apply_diffusion(StateVector &s, const Register &reg) {
    s.check_register(reg);
    auto amps = s.amplitudes();
    const std::uint64_t mask = reg.mask();
    const std::uint64_t d = reg.dim();
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if (base & mask) {
            continue;
        }
        amplitude mean = 0.0;
        for (std::uint64_t v = 0; v < d; ++v) {
            mean += amps[base | (v << reg.offset)];
        }
        mean /= static_cast<double>(d);
        for (std::uint64_t v = 0; v < d; ++v) {
            auto &a = amps[base | (v << reg.offset)];
            a = 2.0 * mean - a;
        }
    }
}

/// Outcome distribution of measuring `reg` in the computational basis.
inline std::vector<double> marginal(const StateVector &s, const Register &reg) {
    s.check_register(reg);
    std::vector<double> p(reg.dim(), 0.0);
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        p[reg.extract(k)] += std::norm(amps[k]);
    }
    return p;
}

struct Measurement {
    std::uint64_t outcome = 0;
    double probability = 0.0;
};

/// Born-rule measurement of `reg`; collapses and renormalizes `s`.
inline Measurement measure(StateVector &s, const Register &reg, Rng &rng) {
    const auto p = marginal(s, reg);
    double u = uniform01(rng);
    std::uint64_t outcome = p.size() - 1;
    for (std::uint64_t v = 0; v < p.size(); ++v) {
        if (u < p[v]) {
            outcome = v;
            break;
        }
        u -= p[v];
    }
    // Rounding can leave u just above the last nonzero bucket.
    while (p[outcome] == 0.0 && outcome > 0) {
        --outcome;
    }
    const double scale = 1.0 / std::sqrt(p[outcome]);
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        amps[k] = reg.extract(k) == outcome ? amps[k] * scale : amplitude{0.0, 0.0};
    }
    return {outcome, p[outcome]};
}

/// Samples a full-register outcome without collapsing (for repeated shots).
inline std::uint64_t sample(std::span<const double> distribution, Rng &rng) {
    double u = uniform01(rng);
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t v = 0; v < distribution.size(); ++v) {
        if (distribution[v] > 0.0) {
            last_nonzero = v;
        }
        if (u < distribution[v]) {
            return v;
        }
        u -= distribution[v];
    }
    return last_nonzero;
}

/// Haar-distributed pure state (normalized complex Gaussian vector).
inline StateVector random_state(std::size_t num_qubits, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<amplitude> amps(std::size_t{1} << num_qubits);
    double n2 = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        n2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amps) {
        a *= inv;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

/// |low> (x) |high>: `low` occupies the low-order qubits.
inline StateVector tensor(const StateVector &low, const StateVector &high) {
    std::vector<amplitude> amps(low.dim() * high.dim());
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < low.dim(); ++l) {
            amps[h * low.dim() + l] = low[l] * high[h];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

inline amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner product of states with different widths");
    }
    amplitude s = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

/// Trace distance ||psi><psi| - phi><phi|||_1 of two pure states,
/// 2 * sqrt(1 - |<psi|phi>|^2).
inline double pure_trace_distance(const StateVector &a, const StateVector &b) {
    const double f = std::norm(inner_product(a, b));
    return 2.0 * std::sqrt(std::max(0.0, 1.0 - f));
}

}  // namespace qtsort
