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
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qtsort/instance.hpp"
#include "qtsort/oracle.hpp"
#include "qtsort/state_vector.hpp"

namespace qtsort {

/// Positions searched over. The index register spans the next power of two;
/// the extra register values are dummies that are never marked.
struct SearchDomain {
    IndexRange positions;

    std::size_t size() const { return positions.size(); }
    std::size_t padded_size() const { return std::bit_ceil(std::max<std::size_t>(size(), 2)); }
    std::size_t index_qubits() const { return ceil_log2(padded_size()); }
    Register index_register() const { return {0, index_qubits()}; }

    static SearchDomain whole(std::size_t n) { return {{0, n}}; }
};

struct SearchConfig {
    /// Dürr–Høyer budget constant: each threshold-descent run stops after
    /// floor(c_dh * sqrt(N)) queries.
    double c_dh = 22.5;
    /// Growth factor of the iteration bound in the unknown-count search.
    double lambda = 6.0 / 5.0;
};

struct SearchOutcome {
    std::optional<std::size_t> index;
    std::uint64_t queries = 0;
    std::size_t peak_qubits = 0;
};

struct MinFindResult {
    /// Empty only for min_above on a block with nothing above the threshold.
    std::optional<std::size_t> index;
    std::uint64_t queries_used = 0;
    /// Live qubits during the call: index register plus the phase ancilla.
    std::size_t workspace_qubits = 0;

    bool exhausted() const { return !index.has_value(); }
};

namespace detail {

/// Uniform superposition, `iterations` Grover rounds, measurement. Returns
/// the measured position, or nullopt for a padding value.
template <OracleInput Input>
std::optional<std::size_t> grover_shot(const SearchDomain &domain, const PredicateSpec &pred, std::uint64_t iterations,
                                       const Input &x, Rng &rng, QueryCounter &counter, std::size_t &peak_qubits) {
    const Register idx = domain.index_register();
    StateVector s(idx.width);
    peak_qubits = std::max(peak_qubits, idx.width);
    apply_hadamard(s, idx);
    for (std::uint64_t r = 0; r < iterations; ++r) {
        phase_mark(s, idx, domain.positions, pred, x, counter);
        apply_diffusion(s, idx);
    }
    const auto m = measure(s, idx, rng);
    if (m.outcome >= domain.size()) {
        return std::nullopt;
    }
    return domain.positions.begin + m.outcome;
}

inline std::uint64_t dh_budget(const SearchDomain &domain, const SearchConfig &cfg) {
    return static_cast<std::uint64_t>(std::floor(cfg.c_dh * std::sqrt(static_cast<double>(domain.size()))));
}

inline std::size_t repetitions_for(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("error bound must lie in (0, 1)");
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log2(1.0 / eps) - 1e-12)));
}

}  // namespace detail

/// Grover search with a fixed iteration count t. Consumes t * query_cost()
/// queries; the measured position is returned unverified (nullopt if a
/// padding value was measured).
template <OracleInput Input>
std::optional<std::size_t> grover_fixed(const SearchDomain &domain, const PredicateSpec &pred, std::uint64_t iterations,
                                        const Input &x, Rng &rng, QueryCounter &counter) {
    std::size_t peak = 0;
    return detail::grover_shot(domain, pred, iterations, x, rng, counter, peak);
}

/// Exponential search for an unknown number of marked positions. Each round
/// draws j uniformly below ceil(m), runs j Grover iterations, measures and
/// verifies the result classically; m <- min(lambda * m, sqrt(N)). Never
/// spends more than `budget` queries.
template <OracleInput Input>
SearchOutcome grover_unknown(const SearchDomain &domain, const PredicateSpec &pred, const Input &x, Rng &rng,
                             QueryCounter &counter, std::uint64_t budget, const SearchConfig &cfg = {}) {
    SearchOutcome out;
    const std::uint64_t cost = pred.query_cost();
    const double m_cap = std::sqrt(static_cast<double>(domain.padded_size()));
    double m = 1.0;
    while (out.queries + cost <= budget) {
        const auto bound = static_cast<std::uint64_t>(std::ceil(m - 1e-12));
        std::uint64_t j = uniform_below(rng, std::max<std::uint64_t>(bound, 1));
        j = std::min(j, (budget - out.queries - cost) / cost);
        const auto hit = detail::grover_shot(domain, pred, j, x, rng, counter, out.peak_qubits);
        out.queries += j * cost;
        if (hit) {
            out.queries += cost;
            if (check_predicate(pred, x, *hit, counter)) {
                out.index = hit;
                return out;
            }
        }
        m = std::min(cfg.lambda * m, m_cap);
    }
    return out;
}

/// Dürr–Høyer threshold descent: start from a random position, repeatedly
/// search for anything below the current threshold, stop when the budget
/// of floor(c_dh * sqrt(N)) queries is spent.
template <OracleInput Input>
MinFindResult durr_hoyer_min(const SearchDomain &domain, const Input &x, Rng &rng, QueryCounter &counter,
                             const SearchConfig &cfg = {}) {
    if (domain.size() == 0) {
        throw std::invalid_argument("minimum of an empty domain");
    }
    MinFindResult res;
    std::size_t t = domain.positions.begin + uniform_below(rng, domain.size());
    if (domain.size() == 1) {
        res.index = t;
        return res;
    }
    const std::uint64_t budget = detail::dh_budget(domain, cfg);
    std::size_t peak = 0;
    while (res.queries_used < budget) {
        const auto found = grover_unknown(domain, PredicateSpec::less_than(t, domain.positions), x, rng, counter,
                                          budget - res.queries_used, cfg);
        res.queries_used += found.queries;
        peak = std::max(peak, found.peak_qubits);
        if (!found.index) {
            break;
        }
        t = *found.index;
    }
    res.index = t;
    res.workspace_qubits = peak + 1;
    return res;
}

/// Minimum finding with error at most eps: ceil(log2(1/eps)) independent
/// Dürr–Høyer runs, the smallest candidate kept via r - 1 comparisons.
template <OracleInput Input>
MinFindResult min_find(const SearchDomain &domain, double eps, const Input &x, Rng &rng, QueryCounter &counter,
                       const SearchConfig &cfg = {}) {
    const std::size_t r = detail::repetitions_for(eps);
    MinFindResult res;
    for (std::size_t k = 0; k < r; ++k) {
        const auto run = durr_hoyer_min(domain, x, rng, counter, cfg);
        res.queries_used += run.queries_used;
        res.workspace_qubits = std::max(res.workspace_qubits, run.workspace_qubits);
        if (!res.index) {
            res.index = run.index;
        } else {
            res.queries_used += 1;
            if (compare_query(x, *run.index, *res.index, counter)) {
                res.index = run.index;
            }
        }
    }
    return res;
}

namespace detail {

/// One threshold-descent run over {i in block : x_i > x_j}. Returns nullopt
/// if nothing above x_j was found within the budget.
template <OracleInput Input>
std::optional<std::size_t> durr_hoyer_above(const SearchDomain &block, std::size_t j, const Input &x, Rng &rng,
                                             QueryCounter &counter, const SearchConfig &cfg, std::uint64_t &used,
                                             std::size_t &peak) {
    const std::uint64_t budget = std::max<std::uint64_t>(dh_budget(block, cfg), 1);
    const auto above_j = PredicateSpec::greater_than(j, block.positions);
    const std::size_t start = block.positions.begin + uniform_below(rng, block.size());
    std::optional<std::size_t> t;
    used += 1;
    if (check_predicate(above_j, x, start, counter)) {
        t = start;
    }
    if (block.size() == 1) {
        return t;
    }
    while (used < budget) {
        const auto pred = t ? PredicateSpec::between(j, *t, block.positions) : above_j;
        const auto found = grover_unknown(block, pred, x, rng, counter, budget - used, cfg);
        used += found.queries;
        peak = std::max(peak, found.peak_qubits);
        if (!found.index) {
            break;
        }
        t = found.index;
    }
    return t;
}

}  // namespace detail

/// Position of the smallest x_l > x_j inside `block`, with error at most
/// eps. Returns an exhausted result when no run found anything above x_j.
template <OracleInput Input>
MinFindResult min_above(const SearchDomain &block, std::size_t j, double eps, const Input &x, Rng &rng,
                        QueryCounter &counter, const SearchConfig &cfg = {}) {
    if (block.size() == 0 || block.positions.end > x.size() || j >= x.size()) {
        throw std::invalid_argument("min_above: block or threshold out of range");
    }
    const std::size_t r = detail::repetitions_for(eps);
    MinFindResult res;
    std::size_t peak = 0;
    for (std::size_t k = 0; k < r; ++k) {
        std::uint64_t used = 0;
        const auto cand = detail::durr_hoyer_above(block, j, x, rng, counter, cfg, used, peak);
        res.queries_used += used;
        if (!cand) {
            continue;
        }
        if (!res.index) {
            res.index = cand;
        } else {
            res.queries_used += 1;
            if (compare_query(x, *cand, *res.index, counter)) {
                res.index = cand;
            }
        }
    }
    res.workspace_qubits = peak == 0 ? 0 : peak + 1;
    return res;
}

/// Runs `subroutine(rng, counter)` l times (l odd) and returns the most
/// frequent output; ties go to the smallest output.
template <class F>
auto boost_majority(F &&subroutine, std::size_t l, Rng &rng, QueryCounter &counter) {
    using Out = std::decay_t<std::invoke_result_t<F &, Rng &, QueryCounter &>>;
    if (l == 0 || l % 2 == 0) {
        throw std::invalid_argument("boost_majority needs an odd number of copies");
    }
    std::map<Out, std::size_t> tally;
    for (std::size_t k = 0; k < l; ++k) {
        ++tally[subroutine(rng, counter)];
    }
    auto best = tally.begin();
    for (auto it = tally.begin(); it != tally.end(); ++it) {
        if (it->second > best->second) {
            best = it;
        }
    }
    return best->first;
}

}  // namespace qtsort
