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

// Reference computations that share no code path with the implementations
// they check. Used by the unit tests and by the selftest suite.

#ifndef QCOMMIT_ORACLES_H
#define QCOMMIT_ORACLES_H

#include <map>
#include <string>
#include <vector>

#include "qcommit/gf2.h"
#include "qcommit/harness.h"
#include "qcommit/kernels.h"

namespace qcommit::oracles {

/// Every y of the right length with row_k . y == r_k, by enumeration, ascending.
std::vector<BitVector> brute_force_solve(const BitMatrix &h, const BitVector &r);

/// log2 of the number of distinct XORs of row subsets.
size_t brute_force_rank(const BitMatrix &h);

/// Bob's view distribution in honest NOVY, by direct enumeration over Alice's
/// x and every sequence of independent hash vectors. Keys match outcome_key.
ProbabilityTable novy_honest_view(size_t n, bool b, uint64_t perm_a, uint64_t perm_c, bool unveil);

/// Bob's view distribution in the honest two-prover protocol, enumerated over
/// r and m_1. Keys match outcome_key.
ProbabilityTable two_prover_honest_view(size_t n, bool b, bool allow_zero_m1, bool unveil);

/// Sorted terms of alpha|0, x_c, y_c> + beta|1, x_{1-c}, y_{1-c}> over layout
/// B(1) X(n) Y(n) Z(1) with Z = z, where c = z and x_k = perm^-1(y_k) computed
/// by exhaustive search.
std::vector<BasisTerm> novy_post_commit_terms(Amplitude alpha, Amplitude beta, bool z, const BitVector &y0,
                                              const BitVector &y1, uint64_t perm_a, uint64_t perm_c);

}  // namespace qcommit::oracles

#endif
