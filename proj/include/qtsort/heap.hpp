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
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtsort/instance.hpp"
#include "qtsort/oracle.hpp"

namespace qtsort {

/// A block minimum: its position and the block it came from.
struct HeapEntry {
    std::size_t position = 0;
    std::size_t block = 0;

    bool operator==(const HeapEntry &) const = default;
};

/// Binary min-heap keyed by x at each entry's position. Keys are never
/// stored: every key comparison is one comparison query.
struct HeapState {
    std::vector<HeapEntry> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

namespace detail {

template <OracleInput Input>
bool heap_less(const HeapState &h, std::size_t a, std::size_t b, const Input &x, QueryCounter &counter) {
    return compare_query(x, h.entries[a].position, h.entries[b].position, counter);
}

template <OracleInput Input>
void sift_down(HeapState &h, std::size_t i, const Input &x, QueryCounter &counter) {
    const std::size_t n = h.size();
    while (true) {
        const std::size_t l = 2 * i + 1, r = l + 1;
        if (l >= n) {
            return;
        }
        std::size_t child = l;
        if (r < n && heap_less(h, r, l, x, counter)) {
            child = r;
        }
        if (!heap_less(h, child, i, x, counter)) {
            return;
        }
        std::swap(h.entries[i], h.entries[child]);
        i = child;
    }
}

template <OracleInput Input>
void sift_up(HeapState &h, std::size_t i, const Input &x, QueryCounter &counter) {
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (!heap_less(h, i, parent, x, counter)) {
            return;
        }
        std::swap(h.entries[i], h.entries[parent]);
        i = parent;
    }
}

}  // namespace detail

/// Bottom-up heapify; at most 2 * size comparisons.
template <OracleInput Input>
HeapState heap_build(std::vector<HeapEntry> minima, const Input &x, QueryCounter &counter) {
    HeapState h{std::move(minima)};
    for (std::size_t i = h.size() / 2; i-- > 0;) {
        detail::sift_down(h, i, x, counter);
    }
    return h;
}

template <OracleInput Input>
HeapEntry heap_extract_min(HeapState &h, const Input &x, QueryCounter &counter) {
    if (h.empty()) {
        throw std::out_of_range("extract from an empty heap");
    }
    HeapEntry top = h.entries.front();
    h.entries.front() = h.entries.back();
    h.entries.pop_back();
    if (!h.empty()) {
        detail::sift_down(h, 0, x, counter);
    }
    return top;
}

template <OracleInput Input>
void heap_insert(HeapState &h, HeapEntry e, const Input &x, QueryCounter &counter) {
    h.entries.push_back(e);
    detail::sift_up(h, h.size() - 1, x, counter);
}

/// Heap property checked against ground truth (no queries).
inline bool heap_ordered(const HeapState &h, const std::vector<std::uint64_t> &values) {
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (values[h.entries[i].position] < values[h.entries[(i - 1) / 2].position]) {
            return false;
        }
    }
    return true;
}

}  // namespace qtsort
