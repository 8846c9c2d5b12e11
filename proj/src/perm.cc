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

#include "qcommit/perm.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace qcommit {

ToyPermutation::ToyPermutation(size_t n, uint64_t a, uint64_t c) : n_(n) {
    if (n == 0 || n > 63) {
        throw std::invalid_argument("permutation width must be in [1, 63], got " + std::to_string(n));
    }
    if (a % 2 == 0) {
        throw std::invalid_argument("permutation multiplier must be odd, got " + std::to_string(a));
    }
    a_ = a & low_mask(n);
    c_ = c & low_mask(n);
    // Newton iteration for the inverse of an odd number mod 2^64; each step
    // doubles the number of correct low bits (3 -> 6 -> ... -> 96).
    uint64_t inv = a_;
    for (int k = 0; k < 5; k++) {
        inv *= 2 - a_ * inv;
    }
    a_inverse_ = inv & low_mask(n);
}

uint64_t ToyPermutation::forward_value(uint64_t x) const {
    return (a_ * x + c_) & low_mask(n_);
}

uint64_t ToyPermutation::inverse_value(uint64_t y) const {
    return (a_inverse_ * (y - c_)) & low_mask(n_);
}

BitVector ToyPermutation::forward(const BitVector &x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("permutation input has wrong length");
    }
    return BitVector::from_value(forward_value(x.value()), n_);
}

BitVector ToyPermutation::inverse(const BitVector &y) const {
    if (y.size() != n_) {
        throw std::invalid_argument("permutation input has wrong length");
    }
    return BitVector::from_value(inverse_value(y.value()), n_);
}

bool ToyPermutation::verify_bijection() const {
    if (n_ > kMaxEnumerationBits) {
        throw std::invalid_argument("permutation too wide to enumerate");
    }
    std::vector<bool> seen(size_t{1} << n_, false);
    for (uint64_t x = 0; x < (uint64_t{1} << n_); x++) {
        uint64_t y = forward_value(x);
        if (seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

}  // namespace qcommit
