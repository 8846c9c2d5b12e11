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

#include <gtest/gtest.h>

#include <set>

using namespace qcommit;

TEST(perm, inverse_of_forward_exhaustive) {
    for (size_t n = 1; n <= 6; n++) {
        for (uint64_t a : {1, 3, 5, 7, 13}) {
            ToyPermutation p(n, a, 3);
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                ASSERT_EQ(p.inverse_value(p.forward_value(x)), x);
                ASSERT_EQ(p.forward_value(p.inverse_value(x)), x);
            }
        }
    }
}

TEST(perm, forward_matches_affine_formula) {
    ToyPermutation p(3);
    const uint64_t image[8] = {3, 0, 5, 2, 7, 4, 1, 6};
    for (uint64_t x = 0; x < 8; x++) {
        ASSERT_EQ(p.forward_value(x), image[x]);
    }
}

TEST(perm, inverse_example) {
    ToyPermutation p(3, 5, 3);
    ASSERT_EQ(p.inverse(BitVector::from_string("011")).str(), "000");
}

TEST(perm, identity) {
    ToyPermutation p(5, 1, 0);
    for (uint64_t y = 0; y < 32; y++) {
        ASSERT_EQ(p.inverse_value(y), y);
    }
}

TEST(perm, verify_bijection) {
    ASSERT_TRUE(ToyPermutation(3, 5, 3).verify_bijection());
    ASSERT_TRUE(ToyPermutation(1, 1, 1).verify_bijection());
    ASSERT_EQ(ToyPermutation(1, 1, 1).forward_value(0), 1u);
    ASSERT_TRUE(ToyPermutation(12).verify_bijection());
    ASSERT_THROW(ToyPermutation(21).verify_bijection(), std::invalid_argument);
}

TEST(perm, rejects_even_multiplier) {
    ASSERT_THROW(ToyPermutation(3, 4, 0), std::invalid_argument);
    ASSERT_THROW(ToyPermutation(0), std::invalid_argument);
    ASSERT_THROW(ToyPermutation(64), std::invalid_argument);
}

TEST(perm, constants_reduced_mod_width) {
    ToyPermutation p(2, 5, 3);
    ASSERT_EQ(p.multiplier(), 1u);
    ASSERT_EQ(p.offset(), 3u);
    std::set<uint64_t> image;
    for (uint64_t x = 0; x < 4; x++) {
        image.insert(p.forward_value(x));
    }
    ASSERT_EQ(image.size(), 4);
}

TEST(perm, wide_inverse) {
    ToyPermutation p(63, 0x123456789abcdefULL | 1, 99);
    for (uint64_t x : {uint64_t{0}, uint64_t{1}, uint64_t{123456789}, low_mask(63)}) {
        ASSERT_EQ(p.inverse_value(p.forward_value(x)), x);
    }
}

TEST(perm, length_checked) {
    ToyPermutation p(3);
    ASSERT_THROW(p.forward(BitVector::from_string("01")), std::invalid_argument);
    ASSERT_THROW(p.inverse(BitVector::from_string("0101")), std::invalid_argument);
}
