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

#include "qcommit/oracles.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qcommit::oracles {

namespace {

bool parity_of_and(const BitVector &a, const BitVector &b) {
    bool p = false;
    for (size_t k = 0; k < a.size(); k++) {
        p ^= a[k] && b[k];
    }
    return p;
}

std::set<uint64_t> span_of(const std::vector<uint64_t> &rows) {
    std::set<uint64_t> span;
    for (uint64_t subset = 0; subset < (uint64_t{1} << rows.size()); subset++) {
        uint64_t v = 0;
        for (size_t k = 0; k < rows.size(); k++) {
            if ((subset >> k) & 1) {
                v ^= rows[k];
            }
        }
        span.insert(v);
    }
    return span;
}

std::string bits(uint64_t v, size_t n) {
    std::string s(n, '0');
    for (size_t k = 0; k < n; k++) {
        if ((v >> (n - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

uint64_t affine(uint64_t a, uint64_t c, uint64_t x, size_t n) {
    uint64_t m = (uint64_t{1} << n) - 1;
    return ((a & m) * x + (c & m)) & m;
}

// Walks all sequences of n-1 independent rows, calling visit(rows, probability).
void for_each_hash_sequence(size_t n, std::vector<uint64_t> &rows, double p,
                            const std::function<void(const std::vector<uint64_t> &, double)> &visit) {
    if (rows.size() + 1 == n) {
        visit(rows, p);
        return;
    }
    std::set<uint64_t> span = span_of(rows);
    uint64_t candidates = (uint64_t{1} << n) - span.size();
    for (uint64_t h = 0; h < (uint64_t{1} << n); h++) {
        if (span.count(h)) {
            continue;
        }
        rows.push_back(h);
        for_each_hash_sequence(n, rows, p / static_cast<double>(candidates), visit);
        rows.pop_back();
    }
}

}  // namespace

std::vector<BitVector> brute_force_solve(const BitMatrix &h, const BitVector &r) {
    size_t n = h.num_cols();
    std::vector<BitVector> out;
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        BitVector y = BitVector::from_value(v, n);
        bool ok = true;
        for (size_t k = 0; k < h.num_rows() && ok; k++) {
            ok = parity_of_and(h[k], y) == r[k];
        }
        if (ok) {
            out.push_back(y);
        }
    }
    return out;
}

size_t brute_force_rank(const BitMatrix &h) {
    std::vector<uint64_t> rows;
    for (const auto &row : h.rows()) {
        rows.push_back(row.value());
    }
    size_t size = span_of(rows).size();
    size_t r = 0;
    while ((size_t{1} << r) < size) {
        r++;
    }
    return r;
}

ProbabilityTable novy_honest_view(size_t n, bool b, uint64_t perm_a, uint64_t perm_c, bool unveil) {
    if (n < 2 || n > 4) {
        throw std::invalid_argument("oracle enumeration supports 2 <= n <= 4");
    }
    ProbabilityTable table;
    const double px = 1.0 / static_cast<double>(uint64_t{1} << n);
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        uint64_t y = affine(perm_a, perm_c, x, n);
        std::vector<uint64_t> rows;
        for_each_hash_sequence(n, rows, px, [&](const std::vector<uint64_t> &hs, double p) {
            std::string key;
            std::vector<bool> answers;
            for (size_t i = 0; i < hs.size(); i++) {
                bool r = __builtin_parityll(hs[i] & y);
                answers.push_back(r);
                std::string idx = std::to_string(i + 1);
                if (!key.empty()) {
                    key += ';';
                }
                key += "Bob>Alice:h_" + idx + "=" + bits(hs[i], n) + ";Alice>Bob:r_" + idx + "=" + (r ? "1" : "0");
            }
            std::vector<uint64_t> solutions;
            for (uint64_t cand = 0; cand < (uint64_t{1} << n); cand++) {
                bool ok = true;
                for (size_t i = 0; i < hs.size() && ok; i++) {
                    ok = static_cast<bool>(__builtin_parityll(hs[i] & cand)) == answers[i];
                }
                if (ok) {
                    solutions.push_back(cand);
                }
            }
            bool a = solutions.at(1) == y;
            bool z = a ^ b;
            key += std::string(";Alice>Bob:z=") + (z ? "1" : "0");
            if (unveil) {
                key += std::string(";Alice>Bob:b=") + (b ? "1" : "0") + ";Alice>Bob:x=" + bits(x, n) + "|accepted=1";
            }
            table[key] += p;
        });
    }
    return table;
}

ProbabilityTable two_prover_honest_view(size_t n, bool b, bool allow_zero_m1, bool unveil) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("oracle enumeration supports 1 <= n <= 6");
    }
    ProbabilityTable table;
    uint64_t count = uint64_t{1} << n;
    uint64_t m1_count = allow_zero_m1 ? count : count - 1;
    double p = 1.0 / static_cast<double>(count) / static_cast<double>(m1_count);
    for (uint64_t r = 0; r < count; r++) {
        for (uint64_t m1 = allow_zero_m1 ? 0 : 1; m1 < count; m1++) {
            uint64_t z = r ^ (b ? m1 : 0);
            std::string key = "Bob>Alice:m_0=" + bits(0, n) + ";Bob>Alice:m_1=" + bits(m1, n) +
                              ";Alice>Bob:z=" + bits(z, n);
            if (unveil) {
                key += std::string(";Alice>Bob:b=") + (b ? "1" : "0") + ";Alice>Bob:r=" + bits(r, n) +
                       ";Alyson>Bob:r'=" + bits(r, n) + "|accepted=1";
            }
            table[key] += p;
        }
    }
    return table;
}

std::vector<BasisTerm> novy_post_commit_terms(Amplitude alpha, Amplitude beta, bool z, const BitVector &y0,
                                              const BitVector &y1, uint64_t perm_a, uint64_t perm_c) {
    size_t n = y0.size();
    auto preimage = [&](uint64_t y) {
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            if (affine(perm_a, perm_c, x, n) == y) {
                return x;
            }
        }
        throw std::logic_error("permutation has no preimage");
    };
    std::vector<BasisTerm> terms;
    for (uint64_t b = 0; b < 2; b++) {
        Amplitude amp = b ? beta : alpha;
        if (std::abs(amp) < 1e-12) {
            continue;
        }
        uint64_t y = ((b ^ z) ? y1 : y0).value();
        uint64_t x = preimage(y);
        uint64_t label = (b << (2 * n + 1)) | (x << (n + 1)) | (y << 1) | (z ? 1 : 0);
        terms.push_back({label, amp});
    }
    std::sort(terms.begin(), terms.end(), [](const BasisTerm &a, const BasisTerm &c) {
        return a.label < c.label;
    });
    return terms;
}

}  // namespace qcommit::oracles
