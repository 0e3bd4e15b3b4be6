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
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qtsort/common.hpp"

namespace qtsort {

/// Half-open range of input positions [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool contains(std::size_t i) const { return i >= begin && i < end; }
    bool operator==(const IndexRange &) const = default;
};

/// Anything the oracle gates can read: n values with a known range bound.
template <class T>
concept OracleInput = requires(const T &x, std::size_t i) {
    { x.size() } -> std::convertible_to<std::size_t>;
    { x.value(i) } -> std::convertible_to<std::uint64_t>;
    { x.range_bound() } -> std::convertible_to<std::uint64_t>;
};

/// n pairwise distinct integers from {1, ..., range_bound}; range_bound
/// defaults to n^2. Immutable once built.
class SortInstance {
  public:
    explicit SortInstance(std::vector<std::uint64_t> values, std::optional<std::uint64_t> range_bound = {},
                          std::optional<std::uint64_t> seed = {})
        : values_(std::move(values)), seed_(seed) {
        if (values_.empty()) {
            throw std::invalid_argument("instance needs at least one value");
        }
        const std::uint64_t n = values_.size();
        range_ = range_bound.value_or(n * n);
        if (range_ < n) {
            throw std::invalid_argument("range bound too small for n distinct values");
        }
        std::unordered_set<std::uint64_t> seen;
        for (auto v : values_) {
            if (v < 1 || v > range_) {
                throw std::invalid_argument("value " + std::to_string(v) + " outside {1.." +
                                            std::to_string(range_) + "}");
            }
            if (!seen.insert(v).second) {
                throw std::invalid_argument("duplicate value " + std::to_string(v));
            }
        }
    }

    std::size_t size() const { return values_.size(); }
    std::uint64_t value(std::size_t i) const { return values_[i]; }
    std::uint64_t range_bound() const { return range_; }
    const std::vector<std::uint64_t> &values() const { return values_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    /// The input x'(i): position i replaced by `v`, all else unchanged.
    SortInstance with_replacement(std::size_t i, std::uint64_t v) const {
        auto vals = values_;
        vals.at(i) = v;
        return SortInstance(std::move(vals), range_);
    }

    bool operator==(const SortInstance &o) const { return values_ == o.values_ && range_ == o.range_; }

  private:
    std::vector<std::uint64_t> values_;
    std::uint64_t range_ = 0;
    std::optional<std::uint64_t> seed_;
};

/// Bits needed for the index register addressing n positions.
inline std::size_t index_bits(std::size_t n) { return std::max<std::size_t>(1, ceil_log2(n)); }

/// Bits needed to hold any value in {1..range_bound}.
inline std::size_t value_bits(std::uint64_t range_bound) {
    return static_cast<std::size_t>(std::bit_width(range_bound));
}

/// n distinct values drawn uniformly without replacement from {1..range};
/// range defaults to n^2.
inline SortInstance random_instance(std::size_t n, Rng &rng, std::optional<std::uint64_t> range = {}) {
    if (n < 2) {
        throw std::invalid_argument("random instance needs n >= 2");
    }
    const std::uint64_t bound = range.value_or(std::uint64_t{n} * n);
    if (bound < n) {
        throw std::invalid_argument("range too small for n distinct values");
    }
    std::vector<std::uint64_t> vals;
    vals.reserve(n);
    std::unordered_set<std::uint64_t> seen;
    while (vals.size() < n) {
        const std::uint64_t v = 1 + uniform_below(rng, bound);
        if (seen.insert(v).second) {
            vals.push_back(v);
        }
    }
    return SortInstance(std::move(vals), bound);
}

inline SortInstance random_instance_seeded(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    auto inst = random_instance(n, rng);
    return SortInstance(inst.values(), inst.range_bound(), seed);
}

/// Ground truth for tests and verification: the sorted order of an input.
class RankOracle {
  public:
    template <OracleInput Input>
    explicit RankOracle(const Input &x) {
        order_.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            order_[i] = i;
            values_.push_back(x.value(i));
        }
        std::sort(order_.begin(), order_.end(),
                  [&](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
    }

    std::size_t size() const { return order_.size(); }
    /// Min(x, rank): the rank-th smallest value, rank in 1..n.
    std::uint64_t min_value(std::size_t rank) const { return values_[position(rank)]; }
    /// Position holding the rank-th smallest value.
    std::size_t position(std::size_t rank) const { return order_.at(rank - 1); }

    std::size_t argmin(IndexRange r) const {
        std::size_t best = r.begin;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (values_[i] < values_[best]) {
                best = i;
            }
        }
        return best;
    }

    /// Position of the smallest value in `r` strictly above x_threshold.
    std::optional<std::size_t> successor(IndexRange r, std::size_t threshold) const {
        std::optional<std::size_t> best;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (values_[i] > values_[threshold] && (!best || values_[i] < values_[*best])) {
                best = i;
            }
        }
        return best;
    }

  private:
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> values_;
};

/// Oracle-gate tally plus labelled checkpoints along the query timeline.
class QueryCounter {
  public:
    struct Mark {
        std::uint64_t at = 0;
        std::string label;
    };

    std::uint64_t read() const { return total_; }
    void add(std::uint64_t k = 1) { total_ += k; }
    void mark_slice(std::string label) { marks_.push_back({total_, std::move(label)}); }
    const std::vector<Mark> &marks() const { return marks_; }
    void reset() {
        total_ = 0;
        marks_.clear();
    }

    /// Queries between consecutive marks, the first measured from zero.
    std::vector<std::uint64_t> slice_deltas() const {
        std::vector<std::uint64_t> d;
        std::uint64_t prev = 0;
        for (const auto &m : marks_) {
            d.push_back(m.at - prev);
            prev = m.at;
        }
        return d;
    }

  private:
    std::uint64_t total_ = 0;
    std::vector<Mark> marks_;
};

}  // namespace qtsort
