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

#include "qcommit/twoprover.h"

#include <string>

namespace qcommit::twoprover {

namespace {

void check_width(size_t n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("two-prover width must be in [1, 20], got " + std::to_string(n));
    }
}

}  // namespace

const Topology &topology() {
    static const Topology t = Topology::two_prover();
    return t;
}

Challenge draw_challenge(size_t n, bool allow_zero_m1, CoinSource &coins) {
    uint64_t count = uint64_t{1} << n;
    uint64_t m1 = allow_zero_m1 ? coins.uniform(count) : coins.uniform_where(count, [](uint64_t v) {
        return v != 0;
    });
    return {BitVector(n), BitVector::from_value(m1, n)};
}

HonestState honest_init(size_t n, CoinSource &coins) {
    check_width(n);
    HonestState st{n, BitVector(n), BitVector(n), BitVector(n), BitVector(n), false, BitVector(n), Phase::kInit, Transcript{}};
    st.r = BitVector::from_value(coins.uniform(uint64_t{1} << n), n);
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kAlyson, Phase::kInit, "r'", st.r);
    st.r_prime = st.r;
    st.phase = Phase::kCommit;
    return st;
}

void honest_commit(HonestState &st, bool b, CoinSource &coins, bool allow_zero_m1) {
    if (st.phase != Phase::kCommit) {
        throw std::logic_error("honest_commit requires the Commit phase");
    }
    Challenge c = draw_challenge(st.n, allow_zero_m1, coins);
    st.m0 = c.m0;
    st.m1 = c.m1;
    st.transcript.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, "m_0", st.m0);
    st.transcript.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, "m_1", st.m1);
    st.b = b;
    st.z = st.r ^ (b ? st.m1 : st.m0);
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, "z", st.z);
}

void honest_unveil(HonestState &st) {
    st.phase = Phase::kUnveil;
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "b", st.b);
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "r", st.r);
    st.transcript.post(topology(), PartyId::kAlyson, PartyId::kBob, Phase::kUnveil, "r'", st.r_prime);
}

bool honest_unveil_check(const Transcript &t, bool b, const BitVector &r, const BitVector &r_prime) {
    const BitVector &z = t.bits("z");
    const BitVector &m = t.bits(b ? "m_1" : "m_0");
    if (r.size() != z.size() || r_prime.size() != z.size() || m.size() != z.size()) {
        return false;
    }
    return r == r_prime && z == (r ^ m);
}

PartyId owner(const std::string &reg) {
    if (reg == kRPrime) {
        return PartyId::kAlyson;
    }
    if (reg == kB || reg == kR || reg == kZ) {
        return PartyId::kAlice;
    }
    throw std::invalid_argument("unknown register '" + reg + "'");
}

AttackState attack_init(size_t n) {
    check_width(n);
    AttackState st{
        SparseState(RegisterLayout{{kB, 1}, {kR, n}, {kZ, n}, {kRPrime, n}}),
        n,
        1,
        0,
        BitVector(n),
        BitVector(n),
        BitVector(n),
        Phase::kInit,
        Transcript{},
    };
    st.state.prepare_epr_pairs(kR, kRPrime);
    st.phase = Phase::kCommit;
    return st;
}

void attack_commit(AttackState &st, Amplitude alpha, Amplitude beta, CoinSource &coins, bool allow_zero_m1) {
    if (st.phase != Phase::kCommit) {
        throw std::logic_error("attack_commit requires the Commit phase");
    }
    st.alpha = alpha;
    st.beta = beta;
    st.state.prepare_qubit(kB, alpha, beta);

    Challenge c = draw_challenge(st.n, allow_zero_m1, coins);
    st.m0 = c.m0;
    st.m1 = c.m1;
    st.transcript.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, "m_0", st.m0);
    st.transcript.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, "m_1", st.m1);

    st.state.coherent_eval({kB, kR}, kZ, [m0 = st.m0.value(), m1 = st.m1.value()](std::span<const uint64_t> v) {
        return v[1] ^ (v[0] ? m1 : m0);
    });
    MeasurementRecord rec = st.state.measure({kZ}, coins);
    st.z = rec.outcome;
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, "z", st.z);
}

AttackUnveil attack_unveil(AttackState &st, CoinSource &coins, MeasureOrder order) {
    st.phase = Phase::kUnveil;
    AttackUnveil out{false, BitVector(st.n), BitVector(st.n), {}};
    auto alice_measures = [&] {
        out.records.push_back(st.state.measure({kB}, coins));
        out.b = out.records.back().outcome[0];
        out.records.push_back(st.state.measure({kR}, coins));
        out.r = out.records.back().outcome;
    };
    auto alyson_measures = [&] {
        out.records.push_back(st.state.measure({kRPrime}, coins));
        out.r_prime = out.records.back().outcome;
    };
    if (order == MeasureOrder::kAliceFirst) {
        alice_measures();
        alyson_measures();
    } else {
        alyson_measures();
        alice_measures();
    }
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "b", out.b);
    st.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "r", out.r);
    st.transcript.post(topology(), PartyId::kAlyson, PartyId::kBob, Phase::kUnveil, "r'", out.r_prime);
    return out;
}

void reunite(AttackState &st) {
    st.transcript.post(topology(), PartyId::kAlyson, PartyId::kAlice, Phase::kRecover, "reunion", true);
    st.phase = Phase::kRecover;
}

SparseState attack_recover(AttackState &st) {
    // The uncomputation acts on both provers' registers at once.
    topology().require(PartyId::kAlyson, PartyId::kAlice, st.phase);
    topology().require(PartyId::kAlice, PartyId::kAlyson, st.phase);

    auto shared = [z = st.z.value(), m0 = st.m0.value(), m1 = st.m1.value()](std::span<const uint64_t> v) {
        return z ^ (v[0] ? m1 : m0);
    };
    st.state.coherent_eval({kB}, kR, shared);
    st.state.coherent_eval({kB}, kRPrime, shared);
    st.state.coherent_eval({}, kZ, [z = st.z.value()](std::span<const uint64_t>) {
        return z;
    });
    st.state.discard_zeroed(kR);
    st.state.discard_zeroed(kRPrime);
    st.state.discard_zeroed(kZ);
    return st.state;
}

}  // namespace qcommit::twoprover
