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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtsort/instance.hpp"
#include "qtsort/state_vector.hpp"

namespace qtsort {

// Every function in this header reads the input and charges exactly one
// query per oracle gate to the supplied counter. Nothing else in the library
// touches the input.

/// |i>|a> -> |i>|a xor x_i>. Index values >= n address nothing (identity).
template <OracleInput Input>
void access_query(StateVector &s, const Register &index, const Register &value, const Input &x,
                  QueryCounter &counter) {
    s.check_register(index);
    s.check_register(value);
    if (overlaps(index, value)) {
        throw std::invalid_argument("index and value registers overlap");
    }
    if (value.width < value_bits(x.range_bound())) {
        throw std::invalid_argument("value register has " + std::to_string(value.width) + " bits, needs " +
                                    std::to_string(value_bits(x.range_bound())));
    }
    if (index.width > 63) {
        throw std::invalid_argument("index register too wide");
    }
    counter.add();
    std::vector<std::uint64_t> table(index.dim(), 0);
    for (std::size_t i = 0; i < table.size() && i < x.size(); ++i) {
        table[i] = x.value(i);
    }
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        const std::uint64_t xi = table[index.extract(k)];
        if (xi == 0) {
            continue;
        }
        const std::uint64_t partner = value.deposit(k, value.extract(k) ^ xi);
        if (partner > k) {
            std::swap(amps[k], amps[partner]);
        }
    }
}

/// |i>|j>|b> -> |i>|j>|b xor [x_i < x_j]>. Out-of-range indices compare false.
template <OracleInput Input>
void comparison_query(StateVector &s, const Register &i_reg, const Register &j_reg, std::size_t result_qubit,
                      const Input &x, QueryCounter &counter) {
    s.check_register(i_reg);
    s.check_register(j_reg);
    s.check_qubit(result_qubit);
    if (overlaps(i_reg, j_reg) || i_reg.contains(result_qubit) || j_reg.contains(result_qubit)) {
        throw std::invalid_argument("comparison registers overlap");
    }
    counter.add();
    const std::uint64_t rb = std::uint64_t{1} << result_qubit;
    auto amps = s.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & rb) {
            continue;
        }
        const std::uint64_t i = i_reg.extract(k), j = j_reg.extract(k);
        if (i < x.size() && j < x.size() && x.value(i) < x.value(j)) {
            std::swap(amps[k], amps[k | rb]);
        }
    }
}

/// One comparison query on basis-state registers: returns [x_i < x_j].
template <OracleInput Input>
bool compare_query(const Input &x, std::size_t i, std::size_t j, QueryCounter &counter) {
    if (i >= x.size() || j >= x.size()) {
        throw std::out_of_range("comparison index out of range");
    }
    counter.add();
    return x.value(i) < x.value(j);
}

/// One access query on a basis-state index with a blank value register.
template <OracleInput Input>
std::uint64_t read_query(const Input &x, std::size_t i, QueryCounter &counter) {
    if (i >= x.size()) {
        throw std::out_of_range("access index out of range");
    }
    counter.add();
    return x.value(i);
}

/// Comparison predicates a phase oracle can mark:
///   less_than     x_i < x_t
///   greater_than  x_i > x_t
///   between       x_lo < x_i < x_t   (requires x_lo < x_t)
/// each optionally restricted to a block of positions.
struct PredicateSpec {
    enum class Kind { less_than, greater_than, between };

    Kind kind = Kind::less_than;
    std::size_t threshold = 0;
    std::size_t lower = 0;
    std::optional<IndexRange> block;

    static PredicateSpec less_than(std::size_t t, std::optional<IndexRange> b = {}) {
        return {Kind::less_than, t, 0, b};
    }
    static PredicateSpec greater_than(std::size_t t, std::optional<IndexRange> b = {}) {
        return {Kind::greater_than, t, 0, b};
    }
    static PredicateSpec between(std::size_t lo, std::size_t t, std::optional<IndexRange> b = {}) {
        return {Kind::between, t, lo, b};
    }

    /// Queries one phase-kickback application costs. A single comparison
    /// kicks back through a |-> ancilla in one gate. `between` uses two:
    /// given x_lo < x_t the pattern ([x_i<x_lo], [x_i<x_t]) is never (1,0),
    /// so (-1)^([x_i<x_lo] xor [x_i<x_t]) is exactly the indicator phase.
    std::uint64_t query_cost() const { return kind == Kind::between ? 2 : 1; }

    template <OracleInput Input>
    void validate(const Input &x) const {
        if (threshold >= x.size() || (kind == Kind::between && lower >= x.size())) {
            throw std::invalid_argument("predicate threshold out of range");
        }
        if (block && (block->size() == 0 || block->end > x.size())) {
            throw std::invalid_argument("predicate block out of range");
        }
        if (kind == Kind::between && x.value(lower) >= x.value(threshold)) {
            throw std::invalid_argument("between predicate needs x_lower < x_threshold");
        }
    }

    /// Raw predicate value; no query is charged. Callers account for it.
    template <OracleInput Input>
    bool holds(const Input &x, std::size_t i) const {
        if (i >= x.size() || (block && !block->contains(i))) {
            return false;
        }
        switch (kind) {
            case Kind::less_than:
                return x.value(i) < x.value(threshold);
            case Kind::greater_than:
                return x.value(i) > x.value(threshold);
            case Kind::between:
                return x.value(lower) < x.value(i) && x.value(i) < x.value(threshold);
        }
        return false;
    }
};

/// Classical check of a predicate at one position, charging query_cost()
/// comparisons.
template <OracleInput Input>
bool check_predicate(const PredicateSpec &p, const Input &x, std::size_t i, QueryCounter &counter) {
    counter.add(p.query_cost());
    return p.holds(x, i);
}

/// Negates the amplitude of every index-register value whose position
/// satisfies `pred`. Register value k addresses position `positions.begin + k`;
/// values past `positions.end` are padding and never marked.
template <OracleInput Input>
void phase_mark(StateVector &s, const Register &index, const IndexRange &positions, const PredicateSpec &pred,
                const Input &x, QueryCounter &counter) {
    s.check_register(index);
    pred.validate(x);
    if (positions.end > x.size()) {
        throw std::invalid_argument("phase mark positions out of range");
    }
    counter.add(pred.query_cost());
    std::vector<char> marked(index.dim(), 0);
    for (std::uint64_t k = 0; k < marked.size() && k < positions.size(); ++k) {
        marked[k] = pred.holds(x, positions.begin + k) ? 1 : 0;
    }
    apply_phase_flip(s, [&](std::uint64_t b) { return marked[index.extract(b)] != 0; });
}

}  // namespace qtsort
