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
#include <optional>
#include <string>

#include "qtsort/quantum_sort.hpp"

namespace qtsort {

/// Classical contrast for quantum_sort: the same block plan, heap, and output
/// loop, but block minima and successors come from a linear scan of
/// comparison queries: block size - 1 for a block minimum, up to twice that
/// for a successor. Exact.
template <OracleInput Input>
SortRun classical_baseline_sort(const Input &x, std::size_t space, const SortConfig &cfg = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = x.size();
    SortRun run;
    auto &rep = run.report;
    rep.plan = plan_blocks(n, space, cfg.c);
    const auto &plan = rep.plan;
    QueryCounter &counter = rep.counter;

    SpaceLedger ledger;
    ledger.allocate("heap", plan.heap_bits());
    const std::size_t local = std::max<std::size_t>(1, ceil_log2(plan.block_size));
    // Minimum of the block, or of its part above x_j: every position is tested
    // against x_j (if given) and then against the best so far, one comparison
    // query each.
    auto scan = [&](IndexRange r, std::optional<std::size_t> above) {
        ledger.allocate("scan_cursor", local);
        ledger.allocate("best_position", local);
        ledger.allocate("threshold", local);
        std::optional<std::size_t> best;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (above && (i == *above || !compare_query(x, *above, i, counter))) {
                continue;
            }
            if (!best || compare_query(x, i, *best, counter)) {
                best = i;
            }
        }
        for (const char *l : {"scan_cursor", "best_position", "threshold"}) {
            ledger.release(l);
        }
        return best;
    };

    std::vector<HeapEntry> minima;
    for (std::size_t k = 0; k < plan.blocks; ++k) {
        minima.push_back({*scan(plan.ranges[k], std::nullopt), k});
    }
    rep.phases.initial_minima = counter.read();

    std::uint64_t before = counter.read();
    HeapState heap = heap_build(std::move(minima), x, counter);
    rep.phases.heap += counter.read() - before;

    for (std::size_t rank = 1; rank <= n; ++rank) {
        before = counter.read();
        const HeapEntry e = heap_extract_min(heap, x, counter);
        rep.phases.heap += counter.read() - before;
        const std::uint64_t value = read_query(x, e.position, counter);
        rep.phases.output += 1;
        run.output.records.push_back({rank, value, e.position});
        counter.mark_slice("output " + std::to_string(rank));
        if (rank == n) {
            break;
        }
        before = counter.read();
        const auto next = scan(plan.ranges[e.block], e.position);
        rep.phases.successor += counter.read() - before;
        if (next) {
            before = counter.read();
            heap_insert(heap, {*next, e.block}, x, counter);
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

}  // namespace qtsort
