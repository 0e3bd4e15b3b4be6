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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qtsort/instance.hpp"
#include "qtsort/quantum_sort.hpp"

namespace qtsort {

/// {"n": .., "seed": .., "values": [..]}; "range" is written when it is not n^2.
inline nlohmann::json instance_to_json(const SortInstance &x) {
    nlohmann::json j{{"n", x.size()}, {"values", x.values()}};
    j["seed"] = x.seed() ? nlohmann::json(*x.seed()) : nlohmann::json(nullptr);
    if (x.range_bound() != static_cast<std::uint64_t>(x.size()) * x.size()) {
        j["range"] = x.range_bound();
    }
    return j;
}

inline SortInstance instance_from_json(const nlohmann::json &j) {
    auto values = j.at("values").get<std::vector<std::uint64_t>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != values.size()) {
        throw std::invalid_argument("instance field n disagrees with the number of values");
    }
    std::optional<std::uint64_t> range;
    if (j.contains("range")) {
        range = j.at("range").get<std::uint64_t>();
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) {
        seed = j.at("seed").get<std::uint64_t>();
    }
    return SortInstance(std::move(values), range, seed);
}

inline SortInstance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return instance_from_json(nlohmann::json::parse(in));
}

inline nlohmann::json to_json(const SpaceLedger::Items &items) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &[label, bits] : items) {
        j.push_back({{"item", label}, {"qubits", bits}});
    }
    return j;
}

inline nlohmann::json to_json(const PhaseBreakdown &p) {
    return {{"initial_minima", p.initial_minima},
            {"heap", p.heap},
            {"successor", p.successor},
            {"output", p.output},
            {"total", p.total()}};
}

inline nlohmann::json to_json(const BlockPlan &p) {
    return {{"blocks", p.blocks},
            {"formula_blocks", p.formula_blocks},
            {"block_size", p.block_size},
            {"heap_bits", p.heap_bits()},
            {"beyond_space_range", p.beyond_space_range}};
}

/// Writes `text` to `path`, or to stdout when the path is empty or "-".
inline void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace qtsort
