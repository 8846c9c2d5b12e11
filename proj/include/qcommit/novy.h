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

// NOVY bit commitment: Alice fixes y = pi(x), answers n-1 random parities of y
// chosen by Bob, and sends z = a XOR b where y is the a-th of the two strings
// consistent with her answers. Unveiling reveals (b, x).
//
// The attack runs Alice's side coherently with b held in a qubit B. Only the
// announced values are measured, so after the commit Alice still holds a
// two-term superposition she can either measure (unveil) or uncompute back to
// the original qubit (recover).

#ifndef QCOMMIT_NOVY_H
#define QCOMMIT_NOVY_H

#include <utility>
#include <vector>

#include "qcommit/coins.h"
#include "qcommit/engine.h"
#include "qcommit/gf2.h"
#include "qcommit/perm.h"
#include "qcommit/qsim.h"

namespace qcommit::novy {

/// Register names used by the attack.
inline constexpr const char *kB = "B";
inline constexpr const char *kX = "X";
inline constexpr const char *kY = "Y";
inline constexpr const char *kZ = "Z";
inline constexpr const char *kRound = "R";

/// The classical content of a commit phase, as Bob sees it.
struct CommitView {
    BitMatrix hashes;
    BitVector answers;
    bool z;

    /// The two strings consistent with the answers, ascending. Throws
    /// TranscriptError if the system does not have exactly two solutions.
    std::pair<BitVector, BitVector> solutions() const;
};

/// Parses h_1..h_{n-1}, r_1..r_{n-1} and z out of a transcript.
CommitView read_commit(const Transcript &t);

struct HonestAlice {
    bool b;
    BitVector x;
    BitVector y;
    BitMatrix hashes;
    std::vector<bool> answers;
    bool a;
    bool z;
};

struct HonestCommit {
    HonestAlice alice;
    Transcript transcript;
};

HonestCommit honest_commit(bool b, size_t n, const ToyPermutation &p, CoinSource &coins);

/// Appends Alice's unveil messages (b, x).
void announce_unveil(Transcript &t, bool b, const BitVector &x);

/// Bob's check: pi(x) equals solution z XOR b of the committed system.
bool honest_unveil_check(const Transcript &t, bool b, const BitVector &x, const ToyPermutation &p);

struct AttackState {
    SparseState state;
    size_t n;
    Amplitude alpha;
    Amplitude beta;
    /// Available once the commit phase is complete.
    bool z = false;
    BitVector y0;
    BitVector y1;
};

struct AttackCommit {
    AttackState st;
    Transcript transcript;
};

struct AttackOptions {
    /// Measure B and X straight after setup instead of at unveil time.
    bool measure_controls_early = false;
};

/// Registers B, X, Y, Z with B = alpha|0> + beta|1> and X, Y in
/// sum_x 2^{-n/2} |x, pi(x)>.
AttackState attack_setup(Amplitude alpha, Amplitude beta, size_t n, const ToyPermutation &p);

/// One hashing round: Bob picks h_i independent of earlier hashes, Alice
/// computes h_i . Y into a fresh ancilla, measures and announces it, then
/// uncomputes and discards the ancilla.
void attack_hash_round(AttackState &st, Transcript &t, CoinSource &coins);

/// Computes Z = index(Y) XOR B coherently, where index(y) = [y == y1] over the
/// public solutions, then measures and announces z.
void attack_announce_index(AttackState &st, Transcript &t, CoinSource &coins);

/// Full commit: setup, n-1 hashing rounds, index announcement.
AttackCommit attack_commit(Amplitude alpha, Amplitude beta, size_t n, const ToyPermutation &p, CoinSource &coins,
                           const AttackOptions &options = {});

struct AttackUnveil {
    bool b;
    BitVector x;
    MeasurementRecord b_record;
    MeasurementRecord x_record;
};

/// Measures B then X.
AttackUnveil attack_unveil(AttackState &st, CoinSource &coins);

/// Uncomputes Z, Y and X keyed on B and discards them. The returned state has
/// the single register B. Throws UncomputationError if any register is left
/// entangled.
SparseState attack_recover(AttackState st, const ToyPermutation &p);

}  // namespace qcommit::novy

#endif
