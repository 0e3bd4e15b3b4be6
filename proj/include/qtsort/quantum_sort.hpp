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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtsort/heap.hpp"
#include "qtsort/instance.hpp"
#include "qtsort/search.hpp"

namespace qtsort {

/// Partition of the n positions into b = floor(S / (c * ceil(log2 n)))
/// contiguous blocks whose sizes differ by at most one. When heap plus
/// min-finding workspace would exceed S, b is lowered until it fits.
/// Throws when even a single block does not fit.
struct BlockPlan {
    std::size_t n = 0;
    std::size_t space = 0;
    double c = 2.0;
    std::size_t formula_blocks = 0;
    std::size_t blocks = 0;
    std::size_t block_size = 0;  // ceil(n / b), the largest block
    std::vector<IndexRange> ranges;
    /// S above n / log2 n, outside the range where the time bound applies.
    bool beyond_space_range = false;

    std::size_t position_bits() const { return ceil_log2(n); }
    std::size_t block_id_bits() const { return ceil_log2(blocks); }
    std::size_t heap_bits() const { return blocks * (position_bits() + block_id_bits()); }
    /// Index register, phase ancilla, threshold and candidate of one min_find.
    std::size_t workspace_bits() const { return 3 * std::max<std::size_t>(1, ceil_log2(block_size)) + 1; }
    std::size_t peak_bits() const { return heap_bits() + workspace_bits(); }
};

inline BlockPlan plan_blocks(std::size_t n, std::size_t space, double c = 2.0) {
    if (n < 2) {
        throw std::invalid_argument("plan_blocks needs n >= 2");
    }
    if (!(c > 0.0)) {
        throw std::invalid_argument("planning constant must be positive");
    }
    const double log_n = static_cast<double>(ceil_log2(n));
    const auto b = static_cast<std::size_t>(std::floor(static_cast<double>(space) / (c * log_n) + 1e-12));
    if (b < 1) {
        throw std::invalid_argument("space " + std::to_string(space) + " too small for one block (need >= " +
                                    std::to_string(static_cast<std::size_t>(std::ceil(c * log_n))) + ")");
    }
    BlockPlan p;
    p.n = n;
    p.space = space;
    p.c = c;
    p.formula_blocks = std::min(b, n);
    for (p.blocks = p.formula_blocks;; --p.blocks) {
        p.block_size = (n + p.blocks - 1) / p.blocks;
        if (p.peak_bits() <= space) {
            break;
        }
        if (p.blocks == 1) {
            throw std::invalid_argument("space " + std::to_string(space) + " too small for one block (need >= " +
                                        std::to_string(p.peak_bits()) + ")");
        }
    }
    const std::size_t q = n / p.blocks, rem = n % p.blocks;
    std::size_t begin = 0;
    for (std::size_t k = 0; k < p.blocks; ++k) {
        const std::size_t len = q + (k < rem ? 1 : 0);
        p.ranges.push_back({begin, begin + len});
        begin += len;
    }
    p.beyond_space_range = static_cast<double>(space) > static_cast<double>(n) / std::log2(static_cast<double>(n));
    return p;
}

/// Live-qubit bookkeeping. Classical control bits are charged as qubits.
class SpaceLedger {
  public:
    using Items = std::vector<std::pair<std::string, std::size_t>>;

    void allocate(std::string label, std::size_t bits) {
        live_.emplace_back(std::move(label), bits);
        current_ += bits;
        if (current_ > peak_) {
            peak_ = current_;
            peak_items_ = live_;
        }
    }

    void release(const std::string &label) {
        for (auto it = live_.begin(); it != live_.end(); ++it) {
            if (it->first == label) {
                current_ -= it->second;
                live_.erase(it);
                return;
            }
        }
        throw std::logic_error("release of unallocated item '" + label + "'");
    }

    std::size_t current() const { return current_; }
    std::size_t peak() const { return peak_; }
    /// What was live when the peak was reached; sums to peak().
    const Items &peak_items() const { return peak_items_; }

  private:
    Items live_;
    Items peak_items_;
    std::size_t current_ = 0;
    std::size_t peak_ = 0;
};

struct SortConfig {
    double c = 2.0;
    SearchConfig search;
    /// Error bounds for the block minima (default 1/S^2) and for the
    /// successor searches (default 1/n^2).
    std::optional<double> initial_eps;
    std::optional<double> successor_eps;
};

/// One emitted output: rank i (1-based) with the claimed Min(x, i) and its
/// position. A run that loses track of every block emits records without
/// a position for the remaining ranks.
struct SortRecord {
    std::size_t rank = 0;
    std::uint64_t value = 0;
    std::optional<std::size_t> position;
};

struct SortOutput {
    std::vector<SortRecord> records;
};

struct PhaseBreakdown {
    std::uint64_t initial_minima = 0;
    std::uint64_t heap = 0;
    std::uint64_t successor = 0;
    std::uint64_t output = 0;

    std::uint64_t total() const { return initial_minima + heap + successor + output; }
};

struct ResourceReport {
    std::uint64_t queries = 0;
    std::size_t peak_space = 0;
    SpaceLedger::Items space_items;
    PhaseBreakdown phases;
    double wall_seconds = 0.0;
    BlockPlan plan;
    std::size_t retired_blocks = 0;
    /// Largest workspace any min-finding call reported.
    std::size_t max_minfind_workspace = 0;
    /// The query timeline, with one mark per emitted output.
    QueryCounter counter;
};

struct SortRun {
    SortOutput output;
    ResourceReport report;
};

/// Qubits charged while one min-finding call is live.
struct MinFindCharge {
    std::size_t index = 0;
    std::size_t ancilla = 1;
    std::size_t threshold = 0;
    std::size_t candidate = 0;

    static MinFindCharge for_plan(const BlockPlan &plan) {
        const std::size_t local = std::max<std::size_t>(1, ceil_log2(plan.block_size));
        return {SearchDomain{{0, plan.block_size}}.index_qubits(), 1, local, local};
    }

    void allocate(SpaceLedger &ledger) const {
        ledger.allocate("minfind_index", index);
        ledger.allocate("phase_ancilla", ancilla);
        ledger.allocate("threshold", threshold);
        ledger.allocate("candidate", candidate);
    }

    void release(SpaceLedger &ledger) const {
        for (const char *l : {"minfind_index", "phase_ancilla", "threshold", "candidate"}) {
            ledger.release(l);
        }
    }
};

/// One min_find per block at error eps.
template <OracleInput Input>
std::vector<MinFindResult> initial_minima(const Input &x, const BlockPlan &plan, double eps, Rng &rng,
                                          QueryCounter &counter, const SearchConfig &cfg = {}) {
    std::vector<MinFindResult> out;
    out.reserve(plan.blocks);
    for (const auto &r : plan.ranges) {
        out.push_back(min_find(SearchDomain{r}, eps, x, rng, counter, cfg));
    }
    return out;
}

/// The block/heap sorting loop driven by quantum minimum finding. Emits ranks
/// 1..n in order; every record is produced even if the search failed.
template <OracleInput Input>
SortRun quantum_sort(const Input &x, std::size_t space, Rng &rng, const SortConfig &cfg = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = x.size();
    SortRun run;
    auto &rep = run.report;
    rep.plan = plan_blocks(n, space, cfg.c);
    const auto &plan = rep.plan;
    const double eps1 = cfg.initial_eps.value_or(1.0 / (static_cast<double>(space) * static_cast<double>(space)));
    const double eps3 = cfg.successor_eps.value_or(1.0 / (static_cast<double>(n) * static_cast<double>(n)));

    QueryCounter &counter = rep.counter;
    SpaceLedger ledger;
    ledger.allocate("heap", plan.heap_bits());
    const auto charge = MinFindCharge::for_plan(plan);
    auto check_workspace = [&](const MinFindResult &r) {
        rep.max_minfind_workspace = std::max(rep.max_minfind_workspace, r.workspace_qubits);
        if (r.workspace_qubits > charge.index + charge.ancilla) {
            throw std::logic_error("min-finding workspace exceeds its ledger charge");
        }
    };

    std::vector<HeapEntry> minima;
    for (std::size_t k = 0; k < plan.blocks; ++k) {
        charge.allocate(ledger);
        const auto r = min_find(SearchDomain{plan.ranges[k]}, eps1, x, rng, counter, cfg.search);
        charge.release(ledger);
        check_workspace(r);
        minima.push_back({*r.index, k});
    }
    rep.phases.initial_minima = counter.read();

    std::uint64_t before = counter.read();
    HeapState heap = heap_build(std::move(minima), x, counter);
    rep.phases.heap += counter.read() - before;

    auto &records = run.output.records;
    records.reserve(n);
    for (std::size_t rank = 1; rank <= n; ++rank) {
        if (heap.empty()) {
            records.push_back({rank, 0, std::nullopt});
            counter.mark_slice("output " + std::to_string(rank));
            continue;
        }
        before = counter.read();
        const HeapEntry e = heap_extract_min(heap, x, counter);
        rep.phases.heap += counter.read() - before;

        const std::uint64_t value = read_query(x, e.position, counter);
        rep.phases.output += 1;
        records.push_back({rank, value, e.position});
        counter.mark_slice("output " + std::to_string(rank));
        if (rank == n) {
            break;
        }

        before = counter.read();
        charge.allocate(ledger);
        const auto r = min_above(SearchDomain{plan.ranges[e.block]}, e.position, eps3, x, rng, counter, cfg.search);
        charge.release(ledger);
        check_workspace(r);
        rep.phases.successor += counter.read() - before;

        if (r.index) {
            before = counter.read();
            heap_insert(heap, {*r.index, e.block}, x, counter);
            rep.phases.heap += counter.read() - before;
        } else {
            ++rep.retired_blocks;
        }
    }

    rep.queries = counter.read();
    rep.peak_space = ledger.peak();
    rep.space_items = ledger.peak_items();
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

struct Verification {
    bool all_correct = false;
    std::vector<bool> flags;
    std::size_t correct = 0;
};

/// Record k is correct iff it names the position and value of Min(x, k).
inline Verification verify_output(const SortOutput &out, const RankOracle &truth) {
    Verification v;
    v.flags.reserve(out.records.size());
    for (const auto &rec : out.records) {
        const bool ok = rec.rank >= 1 && rec.rank <= truth.size() && rec.position &&
                        *rec.position == truth.position(rec.rank) && rec.value == truth.min_value(rec.rank);
        v.flags.push_back(ok);
        v.correct += ok ? 1 : 0;
    }
    v.all_correct = out.records.size() == truth.size() && v.correct == truth.size();
    return v;
}

}  // namespace qtsort
