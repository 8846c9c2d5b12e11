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

#include "qcommit/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcommit {

namespace {

void check_width(size_t n) {
    if (n > BitVector::kMaxBits) {
        throw std::invalid_argument("bit vector longer than 64 bits: " + std::to_string(n));
    }
}

// A row of the augmented system [h | r], coefficients packed like BitVector.
struct AugmentedRow {
    uint64_t coeffs;
    bool rhs;
};

struct Echelon {
    std::vector<AugmentedRow> rows;  // reduced rows, one per pivot
    std::vector<size_t> pivot_bits;  // bit position (not index) of each row's pivot
    bool consistent = true;
};

// Gauss-Jordan elimination. Columns are processed from index 0 (the most
// significant bit) downwards.
Echelon reduce(std::vector<AugmentedRow> rows, size_t cols) {
    Echelon out;
    size_t next = 0;
    for (size_t col = 0; col < cols && next < rows.size(); col++) {
        uint64_t bit = uint64_t{1} << (cols - 1 - col);
        size_t pivot = next;
        while (pivot < rows.size() && !(rows[pivot].coeffs & bit)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[next]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != next && (rows[k].coeffs & bit)) {
                rows[k].coeffs ^= rows[next].coeffs;
                rows[k].rhs ^= rows[next].rhs;
            }
        }
        out.pivot_bits.push_back(cols - 1 - col);
        next++;
    }
    for (size_t k = next; k < rows.size(); k++) {
        if (rows[k].rhs) {
            out.consistent = false;
        }
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

}  // namespace

BitVector::BitVector(size_t n) : n_(n) {
    check_width(n);
}

BitVector BitVector::from_value(uint64_t value, size_t n) {
    BitVector v(n);
    if (value & ~low_mask(n)) {
        throw std::invalid_argument("value does not fit in " + std::to_string(n) + " bits");
    }
    v.value_ = value;
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw std::invalid_argument("not a bitstring: '" + std::string(bits) + "'");
        }
        v.set(k, bits[k] == '1');
    }
    return v;
}

bool BitVector::operator[](size_t index) const {
    if (index >= n_) {
        throw std::out_of_range("bit index out of range");
    }
    return (value_ >> (n_ - 1 - index)) & 1;
}

void BitVector::set(size_t index, bool bit) {
    if (index >= n_) {
        throw std::out_of_range("bit index out of range");
    }
    uint64_t m = uint64_t{1} << (n_ - 1 - index);
    value_ = bit ? (value_ | m) : (value_ & ~m);
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t k = 0; k < n_; k++) {
        if ((*this)[k]) {
            s[k] = '1';
        }
    }
    return s;
}

BitVector BitVector::operator^(const BitVector &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("xor of bit vectors with different lengths");
    }
    return from_value(value_ ^ other.value_, n_);
}

BitMatrix::BitMatrix(std::vector<BitVector> rows, size_t cols) : cols_(cols) {
    check_width(cols);
    for (const auto &row : rows) {
        add_row(row);
    }
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows, size_t cols) {
    BitMatrix h(cols);
    for (const auto &s : rows) {
        h.add_row(BitVector::from_string(s));
    }
    return h;
}

void BitMatrix::add_row(const BitVector &row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length " + std::to_string(row.size()) + " != " + std::to_string(cols_));
    }
    rows_.push_back(row);
}

bool dot(const BitVector &h, const BitVector &y) {
    if (h.size() != y.size()) {
        throw std::invalid_argument("dot product of bit vectors with different lengths");
    }
    return std::popcount(h.value() & y.value()) & 1;
}

size_t rank(const BitMatrix &h) {
    std::vector<AugmentedRow> rows;
    rows.reserve(h.num_rows());
    for (const auto &row : h.rows()) {
        rows.push_back({row.value(), false});
    }
    return reduce(std::move(rows), h.num_cols()).rows.size();
}

std::vector<BitVector> solve_affine(const BitMatrix &h, const BitVector &r) {
    if (r.size() != h.num_rows()) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }
    size_t n = h.num_cols();
    std::vector<AugmentedRow> rows;
    rows.reserve(h.num_rows());
    for (size_t k = 0; k < h.num_rows(); k++) {
        rows.push_back({h[k].value(), r[k]});
    }
    Echelon e = reduce(std::move(rows), n);
    if (!e.consistent) {
        return {};
    }

    uint64_t pivot_mask = 0;
    for (size_t b : e.pivot_bits) {
        pivot_mask |= uint64_t{1} << b;
    }
    std::vector<size_t> free_bits;
    for (size_t b = 0; b < n; b++) {
        if (!(pivot_mask & (uint64_t{1} << b))) {
            free_bits.push_back(b);
        }
    }
    if (free_bits.size() >= 63) {
        throw std::invalid_argument("solution space too large to enumerate");
    }

    std::vector<BitVector> out;
    out.reserve(size_t{1} << free_bits.size());
    for (uint64_t assignment = 0; assignment < (uint64_t{1} << free_bits.size()); assignment++) {
        uint64_t y = 0;
        for (size_t k = 0; k < free_bits.size(); k++) {
            if ((assignment >> k) & 1) {
                y |= uint64_t{1} << free_bits[k];
            }
        }
        // Each reduced row reads pivot + (free part) = rhs.
        for (size_t k = 0; k < e.rows.size(); k++) {
            bool pivot_value = e.rows[k].rhs ^ (std::popcount(e.rows[k].coeffs & y & ~pivot_mask) & 1);
            if (pivot_value) {
                y |= uint64_t{1} << e.pivot_bits[k];
            }
        }
        out.push_back(BitVector::from_value(y, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_row_span(const BitMatrix &h, const BitVector &v) {
    if (v.size() != h.num_cols()) {
        throw std::invalid_argument("vector length does not match column count");
    }
    BitMatrix extended = h;
    extended.add_row(v);
    return rank(extended) == rank(h);
}

BitVector sample_independent_row(const BitMatrix &h, CoinSource &coins) {
    size_t n = h.num_cols();
    if (rank(h) >= n) {
        throw std::invalid_argument("no independent row exists: matrix already has full rank");
    }
    if (n >= 64) {
        throw std::invalid_argument("row width too large to sample");
    }
    uint64_t v = coins.uniform_where(uint64_t{1} << n, [&](uint64_t candidate) {
        return !in_row_span(h, BitVector::from_value(candidate, n));
    });
    return BitVector::from_value(v, n);
}

BitMatrix sample_independent_rows(size_t m, size_t n, CoinSource &coins) {
    if (m > n) {
        throw std::invalid_argument("cannot sample more than n independent rows");
    }
    BitMatrix h(n);
    for (size_t k = 0; k < m; k++) {
        h.add_row(sample_independent_row(h, coins));
    }
    return h;
}

}  // namespace qcommit
