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

// Two-prover commitment. Alice and Alyson share a random string r before being
// separated; Bob sends Alice m_0 = 0^n and a random m_1, she answers
// z = r XOR m_b. To unveil, Alice sends (b, r) and Alyson independently sends
// her copy r'.
//
// In the attack the shared string is replaced by n EPR pairs, so the provers
// agree on r at unveil time without having fixed it, and after the commit the
// pair can still reunite and return B to its original state.

#ifndef QCOMMIT_TWOPROVER_H
#define QCOMMIT_TWOPROVER_H

#include <vector>

#include "qcommit/coins.h"
#include "qcommit/engine.h"
#include "qcommit/gf2.h"
#include "qcommit/qsim.h"

namespace qcommit::twoprover {

inline constexpr const char *kB = "B";
inline constexpr const char *kR = "R";
inline constexpr const char *kZ = "Z";
inline constexpr const char *kRPrime = "R'";

/// Alice<->Alyson only during Init and Recover.
const Topology &topology();

/// Bob's challenge pair. m_1 is uniform over nonzero strings unless
/// allow_zero_m1 is set.
struct Challenge {
    BitVector m0;
    BitVector m1;
};
Challenge draw_challenge(size_t n, bool allow_zero_m1, CoinSource &coins);

struct HonestState {
    size_t n;
    BitVector r;
    BitVector r_prime;
    BitVector m0;
    BitVector m1;
    bool b = false;
    BitVector z;
    Phase phase = Phase::kInit;
    Transcript transcript;
};

/// Alice draws r and hands Alyson a copy, then the two are split.
HonestState honest_init(size_t n, CoinSource &coins);

void honest_commit(HonestState &st, bool b, CoinSource &coins, bool allow_zero_m1 = false);

/// Alice discloses (b, r), Alyson discloses r'.
void honest_unveil(HonestState &st);

/// r == r' and z == r XOR m_b, with z, m_0, m_1 read from the transcript.
bool honest_unveil_check(const Transcript &t, bool b, const BitVector &r, const BitVector &r_prime);

/// Register owner during the separated phases.
PartyId owner(const std::string &reg);

struct AttackState {
    SparseState state;
    size_t n;
    Amplitude alpha = 1;
    Amplitude beta = 0;
    BitVector m0;
    BitVector m1;
    BitVector z;
    Phase phase = Phase::kInit;
    Transcript transcript;
};

/// Registers B, R, Z, R' with (R, R') in n EPR pairs; phase moves to Commit.
AttackState attack_init(size_t n);

/// Prepares B, evaluates Z = R XOR m_B coherently, measures and announces z.
void attack_commit(AttackState &st, Amplitude alpha, Amplitude beta, CoinSource &coins, bool allow_zero_m1 = false);

enum class MeasureOrder { kAliceFirst, kAlysonFirst };

struct AttackUnveil {
    bool b;
    BitVector r;
    BitVector r_prime;
    std::vector<MeasurementRecord> records;
};

/// Alice measures (B, R) and Alyson measures R', each on her own registers.
AttackUnveil attack_unveil(AttackState &st, CoinSource &coins, MeasureOrder order = MeasureOrder::kAliceFirst);

/// Moves to the Recover phase and records Alyson rejoining Alice.
void reunite(AttackState &st);

/// Erases R, R' (and the measured Z) keyed on B and discards them, leaving
/// only B. Throws SeparationBreach unless the provers have reunited.
SparseState attack_recover(AttackState &st);

}  // namespace qcommit::twoprover

#endif
