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

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qtsort/oracle.hpp"
#include "qtsort/state_vector.hpp"

namespace qtsort {

/// A gate of a measurement-free query circuit.
struct Gate {
    enum class Kind { h, x, z, ry, rz, cnot, cz, access_query };

    Kind kind = Kind::h;
    std::size_t a = 0;
    std::size_t b = 0;
    double angle = 0.0;
    Register index;
    Register value;
};

/// Fixed gate sequence whose only input dependence is through access
/// queries.
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    Circuit &h(std::size_t q) { return push({Gate::Kind::h, q}); }
    Circuit &h(const Register &r) {
        for (std::size_t q = r.offset; q < r.end(); ++q) {
            h(q);
        }
        return *this;
    }
    Circuit &x(std::size_t q) { return push({Gate::Kind::x, q}); }
    Circuit &z(std::size_t q) { return push({Gate::Kind::z, q}); }
    Circuit &ry(std::size_t q, double theta) { return push({Gate::Kind::ry, q, 0, theta}); }
    Circuit &rz(std::size_t q, double theta) { return push({Gate::Kind::rz, q, 0, theta}); }
    Circuit &cnot(std::size_t c, std::size_t t) { return push({Gate::Kind::cnot, c, t}); }
    Circuit &cz(std::size_t a, std::size_t b) { return push({Gate::Kind::cz, a, b}); }
    Circuit &query(const Register &index, const Register &value) {
        Gate g{Gate::Kind::access_query};
        g.index = index;
        g.value = value;
        return push(g);
    }

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t query_count() const {
        std::size_t t = 0;
        for (const auto &g : gates_) {
            t += g.kind == Gate::Kind::access_query ? 1 : 0;
        }
        return t;
    }

  private:
    Circuit &push(Gate g) {
        const std::size_t hi = g.kind == Gate::Kind::access_query ? std::max(g.index.end(), g.value.end())
                                                                 : std::max(g.a, g.b) + 1;
        if (hi > num_qubits_) {
            throw std::out_of_range("gate acts outside the circuit's qubits");
        }
        gates_.push_back(g);
        return *this;
    }

    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// Runs `c` on `s` (which may be wider than the circuit). If `magnitudes` is
/// given, accumulates the query magnitude of every index value: the squared
/// amplitude mass on index value i just before each query.
template <OracleInput Input>
void run_circuit(StateVector &s, const Circuit &c, const Input &x, QueryCounter &counter,
                 std::vector<double> *magnitudes = nullptr) {
    if (c.num_qubits() > s.num_qubits()) {
        throw std::invalid_argument("state narrower than circuit");
    }
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case Gate::Kind::h:
                apply_hadamard(s, g.a);
                break;
            case Gate::Kind::x:
                apply_x(s, g.a);
                break;
            case Gate::Kind::z:
                apply_z(s, g.a);
                break;
            case Gate::Kind::ry:
                apply_ry(s, g.a, g.angle);
                break;
            case Gate::Kind::rz:
                apply_rz(s, g.a, g.angle);
                break;
            case Gate::Kind::cnot:
                apply_cnot(s, g.a, g.b);
                break;
            case Gate::Kind::cz:
                apply_cz(s, g.a, g.b);
                break;
            case Gate::Kind::access_query:
                if (magnitudes) {
                    const auto p = marginal(s, g.index);
                    magnitudes->resize(std::max(magnitudes->size(), p.size()), 0.0);
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        (*magnitudes)[i] += p[i];
                    }
                }
                access_query(s, g.index, g.value, x, counter);
                break;
        }
    }
}

/// Final state of `c` run from the blank state on `width` qubits
/// (default: the circuit's own width).
template <OracleInput Input>
StateVector final_state(const Circuit &c, const Input &x, std::size_t width = 0) {
    StateVector s(width == 0 ? c.num_qubits() : width);
    QueryCounter scratch;
    run_circuit(s, c, x, scratch);
    return s;
}

/// Layout used by the lab's query circuits: index, value, then work qubits.
struct QueryLayout {
    Register index;
    Register value;
    Register work;

    std::size_t num_qubits() const { return work.end(); }

    static QueryLayout make(std::size_t n, std::uint64_t range_bound, std::size_t work_qubits, std::size_t offset = 0) {
        QueryLayout l;
        l.index = {offset, index_bits(n)};
        l.value = {l.index.end(), value_bits(range_bound)};
        l.work = {l.value.end(), work_qubits};
        return l;
    }
};

/// Random measurement-free circuit with exactly `queries` access queries:
/// layers of random rotations on index and work qubits and random CNOTs,
/// interleaved with queries, ending with a scrambling layer over everything.
inline Circuit random_query_circuit(const QueryLayout &l, std::size_t queries, Rng &rng) {
    Circuit c(l.num_qubits());
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<std::size_t> active;
    for (std::size_t q = l.index.offset; q < l.index.end(); ++q) {
        active.push_back(q);
    }
    for (std::size_t q = l.work.offset; q < l.work.end(); ++q) {
        active.push_back(q);
    }
    auto layer = [&](const std::vector<std::size_t> &qs) {
        for (auto q : qs) {
            c.ry(q, angle(rng));
            c.rz(q, angle(rng));
        }
        for (std::size_t k = 0; k + 1 < qs.size(); ++k) {
            const std::size_t a = qs[uniform_below(rng, qs.size())];
            const std::size_t b = qs[uniform_below(rng, qs.size())];
            if (a != b) {
                c.cnot(a, b);
            }
        }
    };
    std::vector<std::size_t> all = active;
    for (std::size_t q = l.value.offset; q < l.value.end(); ++q) {
        all.push_back(q);
    }
    for (std::size_t t = 0; t < queries; ++t) {
        layer(t == 0 ? active : all);
        c.query(l.index, l.value);
    }
    layer(all);
    return c;
}

}  // namespace qtsort
