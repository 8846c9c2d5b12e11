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

#ifndef QCOMMIT_COINS_H
#define QCOMMIT_COINS_H

#include <cstdint>
#include <functional>
#include <random>
#include <span>

namespace qcommit {

/// Source of every random choice a protocol run makes: party coins and
/// measurement outcomes alike.
///
/// Protocol code never touches a random engine directly. Routing all choices
/// through this interface lets the same code be driven either by a seeded
/// engine (sampling) or by an exhaustive explorer that walks every branch
/// with its exact probability (see harness.h).
class CoinSource {
   public:
    virtual ~CoinSource() = default;

    /// Index in [0, weights.size()) with probability proportional to weights.
    /// Weights must be non-negative with a positive sum.
    virtual size_t weighted(std::span<const double> weights) = 0;

    /// Uniform value in [0, count).
    virtual uint64_t uniform(uint64_t count) = 0;

    /// Uniform value in [0, count) among those satisfying accept. The sampled
    /// implementation redraws until accept holds.
    virtual uint64_t uniform_where(uint64_t count, const std::function<bool(uint64_t)> &accept) = 0;
};

/// CoinSource backed by a 64-bit Mersenne twister.
class SeededCoins final : public CoinSource {
   public:
    explicit SeededCoins(uint64_t seed);

    /// Independent stream for trial `trial` of a run seeded with `seed`.
    static SeededCoins for_trial(uint64_t seed, uint64_t trial);

    size_t weighted(std::span<const double> weights) override;
    uint64_t uniform(uint64_t count) override;
    uint64_t uniform_where(uint64_t count, const std::function<bool(uint64_t)> &accept) override;

   private:
    explicit SeededCoins(std::seed_seq &seq);
    std::mt19937_64 engine_;
};

}  // namespace qcommit

#endif
