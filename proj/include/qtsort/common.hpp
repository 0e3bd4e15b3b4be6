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

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#ifndef QTSORT_VERSION
#define QTSORT_VERSION "0.1.0"
#endif

namespace qtsort {

/// Raised when a requested register would not fit under the statevector cap.
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Absolute tolerance for algebraic identities (norms, traces, Hermiticity).
/// Process-wide; the CLI may override it from its config.
inline double &numeric_tolerance() {
    static double tol = 1e-9;
    return tol;
}

/// Largest statevector (in qubits) we agree to allocate. Read once from
/// QTSORT_MAX_QUBITS, default 24.
inline std::size_t max_qubits() {
    static const std::size_t cap = [] {
        if (const char *env = std::getenv("QTSORT_MAX_QUBITS")) {
            char *end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && v > 0 && v < 40) {
                return static_cast<std::size_t>(v);
            }
        }
        return std::size_t{24};
    }();
    return cap;
}

/// ceil(log2(x)) for x >= 1; 0 for x <= 1.
constexpr std::size_t ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-mode seed splitting: the seed of stream `index` depends only on
/// (master, index), so results do not depend on how trials are scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

inline double uniform01(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

}  // namespace qtsort
