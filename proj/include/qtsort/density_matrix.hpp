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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtsort/common.hpp"
#include "qtsort/state_vector.hpp"

namespace qtsort {

using ComplexMatrix = Eigen::MatrixXcd;

/// How far a matrix is from being a density matrix.
struct DensityDiagnostics {
    double hermitian_error = 0.0;  // max |A - A^dagger| entry
    double trace_error = 0.0;      // |tr A - 1|
    double min_eigenvalue = 0.0;

    bool ok(double tol = numeric_tolerance()) const {
        return hermitian_error <= tol && trace_error <= tol && min_eigenvalue >= -tol;
    }
};

inline double hermitian_error(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigenvalues of the Hermitian part of `m`, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m) {
    const ComplexMatrix h = (m + m.adjoint()) / 2.0;
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

inline DensityDiagnostics diagnose_density(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("density matrix must be square and nonempty");
    }
    DensityDiagnostics d;
    d.hermitian_error = hermitian_error(m);
    d.trace_error = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
    d.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
    return d;
}

/// Hermitian, positive semidefinite, unit trace. Construction validates.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
        const auto d = diagnose_density(m_);
        if (!d.ok()) {
            throw std::invalid_argument("not a density matrix (hermitian err " +
                                        std::to_string(d.hermitian_error) + ", trace err " +
                                        std::to_string(d.trace_error) + ", min eig " +
                                        std::to_string(d.min_eigenvalue) + ")");
        }
    }

    static DensityMatrix pure(const StateVector &s) {
        Eigen::VectorXcd v(s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) {
            v[k] = s[k];
        }
        return DensityMatrix(v * v.adjoint());
    }

    /// I / 2^m.
    static DensityMatrix maximally_mixed(std::size_t num_qubits) {
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
        return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
    }

    Eigen::Index dim() const { return m_.rows(); }
    const ComplexMatrix &matrix() const { return m_; }
    DensityDiagnostics diagnostics() const { return diagnose_density(m_); }

  private:
    ComplexMatrix m_;
};

/// rho = sum_k p_k |phi_k><phi_k|.
inline DensityMatrix density_from_ensemble(std::span<const std::pair<double, StateVector>> ensemble) {
    if (ensemble.empty()) {
        throw std::invalid_argument("empty ensemble");
    }
    const std::size_t dim = ensemble.front().second.dim();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    double total = 0.0;
    for (const auto &[p, phi] : ensemble) {
        if (phi.dim() != dim) {
            throw std::invalid_argument("ensemble states have different dimensions");
        }
        if (p < 0.0) {
            throw std::invalid_argument("negative ensemble probability");
        }
        total += p;
        Eigen::VectorXcd v(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            v[k] = phi[k];
        }
        rho += p * (v * v.adjoint());
    }
    if (std::abs(total - 1.0) > numeric_tolerance()) {
        throw std::invalid_argument("ensemble probabilities do not sum to 1");
    }
    return DensityMatrix(std::move(rho));
}

/// Sum of singular values. Hermitian inputs go through the eigensolver.
inline double trace_norm(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("trace norm needs a square matrix");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    if (hermitian_error(m) <= numeric_tolerance()) {
        return hermitian_eigenvalues(m).cwiseAbs().sum();
    }
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues().sum();
}

/// Outcome probabilities tr(P_k rho) of a measurement given by projectors.
inline std::vector<double> outcome_distribution(const DensityMatrix &rho,
                                                std::span<const ComplexMatrix> projectors) {
    std::vector<double> p;
    p.reserve(projectors.size());
    for (const auto &proj : projectors) {
        p.push_back((proj * rho.matrix()).trace().real());
    }
    return p;
}

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distributions have different supports");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::abs(a[k] - b[k]);
    }
    return s;
}

/// Two-outcome projective measurement onto the nonnegative / negative
/// eigenspaces of rho1 - rho2.
struct HelstromMeasurement {
    ComplexMatrix positive;
    ComplexMatrix negative;
    double achieved_distance = 0.0;

    std::vector<ComplexMatrix> projectors() const { return {positive, negative}; }
};

inline HelstromMeasurement helstrom_measurement(const DensityMatrix &rho1, const DensityMatrix &rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw std::invalid_argument("Helstrom measurement of states with different dimensions");
    }
    const ComplexMatrix delta = rho1.matrix() - rho2.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((delta + delta.adjoint()) / 2.0);
    const auto dim = delta.rows();
    HelstromMeasurement h;
    h.positive = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        if (es.eigenvalues()[k] > 0.0) {
            const auto v = es.eigenvectors().col(k);
            h.positive += v * v.adjoint();
        }
    }
    h.negative = ComplexMatrix::Identity(dim, dim) - h.positive;
    const auto projs = h.projectors();
    const auto p1 = outcome_distribution(rho1, projs);
    const auto p2 = outcome_distribution(rho2, projs);
    h.achieved_distance = l1_distance(p1, p2);
    return h;
}

/// The sigma with  I/2^m = rho/2^m + (1 - 1/2^m) sigma, i.e.
/// sigma = (I/2^m - rho/2^m) / (1 - 1/2^m).
inline DensityMatrix mix_decompose(const DensityMatrix &rho, std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("mixing decomposition needs at least one qubit");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    if (rho.dim() != dim) {
        throw std::invalid_argument("density matrix dimension does not match qubit count");
    }
    const double w = 1.0 / static_cast<double>(dim);
    const ComplexMatrix mixed = ComplexMatrix::Identity(dim, dim) * w;
    return DensityMatrix((mixed - w * rho.matrix()) / (1.0 - w));
}

/// Reduced state of `keep` after tracing out every other qubit of `s`.
inline DensityMatrix reduced_density(const StateVector &s, const Register &keep) {
    s.check_register(keep);
    const auto dim = static_cast<Eigen::Index>(keep.dim());
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    const std::uint64_t mask = keep.mask();
    for (std::uint64_t a = 0; a < s.dim(); ++a) {
        if (s[a] == amplitude{}) {
            continue;
        }
        const std::uint64_t env = a & ~mask;
        const auto ra = static_cast<Eigen::Index>(keep.extract(a));
        for (std::uint64_t v = 0; v < keep.dim(); ++v) {
            const std::uint64_t b = env | (v << keep.offset);
            rho(ra, static_cast<Eigen::Index>(v)) += s[a] * std::conj(s[b]);
        }
    }
    return DensityMatrix(std::move(rho));
}

/// Mixture of `rank` Haar-random pure states with random weights.
inline DensityMatrix random_density(std::size_t num_qubits, std::size_t rank, Rng &rng) {
    std::vector<std::pair<double, StateVector>> ens;
    std::vector<double> w(rank);
    double total = 0.0;
    for (auto &x : w) {
        x = uniform01(rng) + 1e-3;
        total += x;
    }
    for (std::size_t k = 0; k < rank; ++k) {
        ens.emplace_back(w[k] / total, random_state(num_qubits, rng));
    }
    return density_from_ensemble(ens);
}

/// Rank-1 projectors onto a random orthonormal basis (QR of a complex
/// Gaussian matrix).
inline std::vector<ComplexMatrix> random_projective_measurement(Eigen::Index dim, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            a(r, c) = {g(rng), g(rng)};
        }
    }
    const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(a).householderQ();
    std::vector<ComplexMatrix> projs;
    projs.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index c = 0; c < dim; ++c) {
        projs.push_back(q.col(c) * q.col(c).adjoint());
    }
    return projs;
}

}  // namespace qtsort
