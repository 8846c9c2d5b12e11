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

#ifndef QCOMMIT_GF2_H
#define QCOMMIT_GF2_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcommit/coins.h"

namespace qcommit {

/// Mask with the low `width` bits set. Valid for width in [0, 64].
constexpr uint64_t low_mask(size_t width) {
    return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

/// Fixed-length string of bits over GF(2), packed into one machine word.
///
/// Bit index 0 is the most significant bit of value(), so ordering by value()
/// is the same as lexicographic ordering of the printed string.
class BitVector {
   public:
    static constexpr size_t kMaxBits = 64;

    BitVector() = default;
    /// All-zero vector of length n.
    explicit BitVector(size_t n);

    static BitVector from_value(uint64_t value, size_t n);
    /// Parses '0'/'1' characters, index 0 leftmost.
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return n_;
    }
    uint64_t value() const {
        return value_;
    }
    bool operator[](size_t index) const;
    void set(size_t index, bool bit);
    bool is_zero() const {
        return value_ == 0;
    }
    std::string str() const;

    BitVector operator^(const BitVector &other) const;

    bool operator==(const BitVector &other) const = default;
    std::strong_ordering operator<=>(const BitVector &other) const = default;

   private:
    size_t n_ = 0;
    uint64_t value_ = 0;
};

/// Rows of equal-length bit vectors.
class BitMatrix {
   public:
    explicit BitMatrix(size_t cols) : cols_(cols) {
    }
    BitMatrix(std::vector<BitVector> rows, size_t cols);
    static BitMatrix from_strings(const std::vector<std::string> &rows, size_t cols);

    void add_row(const BitVector &row);
    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return cols_;
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    const BitVector &operator[](size_t k) const {
        return rows_[k];
    }

   private:
    size_t cols_;
    std::vector<BitVector> rows_;
};

/// Inner product over GF(2). Throws std::invalid_argument on length mismatch.
bool dot(const BitVector &h, const BitVector &y);

/// Row rank over GF(2).
size_t rank(const BitMatrix &h);

/// Every y with h * y = r, ascending by value(). Empty when the system is
/// inconsistent; otherwise 2^(cols - rank) entries.
std::vector<BitVector> solve_affine(const BitMatrix &h, const BitVector &r);

/// True when v is a GF(2) combination of the rows of h (the zero vector always is).
bool in_row_span(const BitMatrix &h, const BitVector &v);

/// Uniform row of length h.num_cols() outside the row span of h. Drawn by
/// rejection: dependent candidates are redrawn.
BitVector sample_independent_row(const BitMatrix &h, CoinSource &coins);

/// m x n matrix of rank exactly m, rows drawn one at a time with
/// sample_independent_row.
BitMatrix sample_independent_rows(size_t m, size_t n, CoinSource &coins);

}  // namespace qcommit

#endif
