// Copyright 2026 The qcommit Authors
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

#include "qcommit/coins.h"

#include <stdexcept>

namespace qcommit {

SeededCoins::SeededCoins(uint64_t seed) : engine_(seed) {
}

SeededCoins::SeededCoins(std::seed_seq &seq) : engine_(seq) {
}

SeededCoins SeededCoins::for_trial(uint64_t seed, uint64_t trial) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(trial),
        static_cast<uint32_t>(trial >> 32),
    };
    return SeededCoins(seq);
}

size_t SeededCoins::weighted(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) {
        if (w < 0) {
            throw std::invalid_argument("negative weight");
        }
        total += w;
    }
    if (!(total > 0)) {
        throw std::invalid_argument("weights must have a positive sum");
    }
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(engine_) * total;
    size_t last_positive = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        if (weights[k] <= 0) {
            continue;
        }
        last_positive = k;
        if (u < weights[k]) {
            return k;
        }
        u -= weights[k];
    }
    // Rounding left u just past the final bucket.
    return last_positive;
}

uint64_t SeededCoins::uniform(uint64_t count) {
    if (count == 0) {
        throw std::invalid_argument("uniform over an empty range");
    }
    return std::uniform_int_distribution<uint64_t>(0, count - 1)(engine_);
}

uint64_t SeededCoins::uniform_where(uint64_t count, const std::function<bool(uint64_t)> &accept) {
    while (true) {
        uint64_t v = uniform(count);
        if (accept(v)) {
            return v;
        }
    }
}

}  // namespace qcommit
