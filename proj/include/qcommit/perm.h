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

#ifndef QCOMMIT_PERM_H
#define QCOMMIT_PERM_H

#include <cstdint>

#include "qcommit/gf2.h"

namespace qcommit {

/// Affine bijection x -> (a*x + c) mod 2^n on n-bit strings.
///
/// Stands in for the one-way permutation of the NOVY commitment. It is
/// trivially invertible; the inverse is meant for attack code only.
class ToyPermutation {
   public:
    static constexpr uint64_t kDefaultMultiplier = 5;
    static constexpr uint64_t kDefaultOffset = 3;
    static constexpr size_t kMaxEnumerationBits = 20;

    /// a and c are reduced mod 2^n. Throws std::invalid_argument when a is
    /// even or n is outside [1, 63].
    explicit ToyPermutation(size_t n, uint64_t a = kDefaultMultiplier, uint64_t c = kDefaultOffset);

    size_t width() const {
        return n_;
    }
    uint64_t multiplier() const {
        return a_;
    }
    uint64_t offset() const {
        return c_;
    }

    uint64_t forward_value(uint64_t x) const;
    uint64_t inverse_value(uint64_t y) const;
    BitVector forward(const BitVector &x) const;
    BitVector inverse(const BitVector &y) const;

    /// Enumerates all 2^n inputs and checks the image has no repeats.
    /// Throws std::invalid_argument above kMaxEnumerationBits.
    bool verify_bijection() const;

   private:
    size_t n_;
    uint64_t a_;
    uint64_t c_;
    uint64_t a_inverse_;
};

}  // namespace qcommit

#endif
