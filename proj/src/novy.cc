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

#include "qcommit/novy.h"

#include <bit>
#include <string>

namespace qcommit::novy {

namespace {

const Topology &topology() {
    static const Topology t = Topology::single_prover();
    return t;
}

std::string indexed(const char *prefix, size_t i) {
    return std::string(prefix) + "_" + std::to_string(i);
}

void check_width(size_t n) {
    // B, X, Y, Z and the round ancilla must fit in one 64-bit label.
    if (n < 2 || 2 * n + 3 > 64) {
        throw std::invalid_argument("NOVY needs 2 <= n <= 30, got " + std::to_string(n));
    }
}

}  // namespace

std::pair<BitVector, BitVector> CommitView::solutions() const {
    auto ys = solve_affine(hashes, answers);
    if (ys.size() != 2) {
        throw TranscriptError("committed system has " + std::to_string(ys.size()) + " solutions, expected 2");
    }
    return {ys[0], ys[1]};
}

CommitView read_commit(const Transcript &t) {
    const Message *first = t.find("h_1");
    if (first == nullptr || !std::holds_alternative<BitVector>(first->value)) {
        throw TranscriptError("transcript has no hash vector h_1");
    }
    size_t n = std::get<BitVector>(first->value).size();
    CommitView view{BitMatrix(n), BitVector(n - 1), false};
    for (size_t i = 1; i < n; i++) {
        view.hashes.add_row(t.bits(indexed("h", i)));
        view.answers.set(i - 1, t.bit(indexed("r", i)));
    }
    view.z = t.bit("z");
    return view;
}

HonestCommit honest_commit(bool b, size_t n, const ToyPermutation &p, CoinSource &coins) {
    check_width(n);
    if (p.width() != n) {
        throw std::invalid_argument("permutation width does not match n");
    }
    HonestCommit out{
        HonestAlice{b, BitVector(n), BitVector(n), BitMatrix(n), {}, false, false},
        Transcript{},
    };
    HonestAlice &alice = out.alice;
    alice.x = BitVector::from_value(coins.uniform(uint64_t{1} << n), n);
    alice.y = p.forward(alice.x);

    for (size_t i = 1; i < n; i++) {
        BitVector h = sample_independent_row(alice.hashes, coins);
        out.transcript.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, indexed("h", i), h);
        alice.hashes.add_row(h);
        bool r = dot(h, alice.y);
        alice.answers.push_back(r);
        out.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, indexed("r", i), r);
    }

    BitVector answers(n - 1);
    for (size_t i = 0; i + 1 < n; i++) {
        answers.set(i, alice.answers[i]);
    }
    auto ys = solve_affine(alice.hashes, answers);
    alice.a = ys.at(1) == alice.y;
    alice.z = alice.a ^ b;
    out.transcript.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, "z", alice.z);
    return out;
}

void announce_unveil(Transcript &t, bool b, const BitVector &x) {
    t.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "b", b);
    t.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kUnveil, "x", x);
}

bool honest_unveil_check(const Transcript &t, bool b, const BitVector &x, const ToyPermutation &p) {
    CommitView view = read_commit(t);
    auto [y0, y1] = view.solutions();
    if (x.size() != p.width() || x.size() != y0.size()) {
        return false;
    }
    return p.forward(x) == ((view.z ^ b) ? y1 : y0);
}

AttackState attack_setup(Amplitude alpha, Amplitude beta, size_t n, const ToyPermutation &p) {
    check_width(n);
    if (p.width() != n) {
        throw std::invalid_argument("permutation width does not match n");
    }
    AttackState st{
        SparseState(RegisterLayout{{kB, 1}, {kX, n}, {kY, n}, {kZ, 1}}),
        n,
        alpha,
        beta,
        false,
        BitVector(n),
        BitVector(n),
    };
    st.state.prepare_qubit(kB, alpha, beta);
    st.state.uniform_superpose(kX);
    st.state.coherent_eval({kX}, kY, [&p](std::span<const uint64_t> v) {
        return p.forward_value(v[0]);
    });
    return st;
}

void attack_hash_round(AttackState &st, Transcript &t, CoinSource &coins) {
    size_t n = st.n;
    BitMatrix previous(n);
    for (size_t i = 1;; i++) {
        const Message *m = t.find(indexed("h", i));
        if (m == nullptr) {
            break;
        }
        previous.add_row(std::get<BitVector>(m->value));
    }
    size_t round = previous.num_rows() + 1;
    if (round >= n) {
        throw std::logic_error("all n-1 hashing rounds already ran");
    }

    BitVector h = sample_independent_row(previous, coins);
    t.post(topology(), PartyId::kBob, PartyId::kAlice, Phase::kCommit, indexed("h", round), h);

    auto parity = [hv = h.value()](std::span<const uint64_t> v) -> uint64_t {
        return std::popcount(hv & v[0]) & 1;
    };
    st.state.allocate(kRound, 1);
    st.state.coherent_eval({kY}, kRound, parity);
    MeasurementRecord rec = st.state.measure({kRound}, coins);
    bool r = rec.outcome[0];
    t.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, indexed("r", round), r);
    // Every surviving label now has parity r, so a second evaluation returns
    // the ancilla to zero.
    st.state.coherent_eval({kY}, kRound, parity);
    st.state.discard_zeroed(kRound);
}

void attack_announce_index(AttackState &st, Transcript &t, CoinSource &coins) {
    CommitView partial{BitMatrix(st.n), BitVector(st.n - 1), false};
    for (size_t i = 1; i < st.n; i++) {
        partial.hashes.add_row(t.bits(indexed("h", i)));
        partial.answers.set(i - 1, t.bit(indexed("r", i)));
    }
    auto [y0, y1] = partial.solutions();
    st.y0 = y0;
    st.y1 = y1;
    st.state.coherent_eval({kY, kB}, kZ, [y1v = y1.value()](std::span<const uint64_t> v) -> uint64_t {
        return (v[0] == y1v ? 1 : 0) ^ v[1];
    });
    MeasurementRecord rec = st.state.measure({kZ}, coins);
    st.z = rec.outcome[0];
    t.post(topology(), PartyId::kAlice, PartyId::kBob, Phase::kCommit, "z", st.z);
}

AttackCommit attack_commit(Amplitude alpha, Amplitude beta, size_t n, const ToyPermutation &p, CoinSource &coins,
                           const AttackOptions &options) {
    AttackCommit out{attack_setup(alpha, beta, n, p), Transcript{}};
    if (options.measure_controls_early) {
        out.st.state.measure({kB}, coins);
        out.st.state.measure({kX}, coins);
    }
    for (size_t i = 1; i < n; i++) {
        attack_hash_round(out.st, out.transcript, coins);
    }
    attack_announce_index(out.st, out.transcript, coins);
    return out;
}

AttackUnveil attack_unveil(AttackState &st, CoinSource &coins) {
    MeasurementRecord b_rec = st.state.measure({kB}, coins);
    MeasurementRecord x_rec = st.state.measure({kX}, coins);
    return {b_rec.outcome[0], x_rec.outcome, std::move(b_rec), std::move(x_rec)};
}

SparseState attack_recover(AttackState st, const ToyPermutation &p) {
    const uint64_t z = st.z;
    const uint64_t y0 = st.y0.value();
    const uint64_t y1 = st.y1.value();
    auto y_of = [=](uint64_t b) {
        return (b ^ z) ? y1 : y0;
    };
    // Z still equals index(Y) XOR B on every label; re-evaluating clears it.
    st.state.coherent_eval({kY, kB}, kZ, [y1](std::span<const uint64_t> v) -> uint64_t {
        return (v[0] == y1 ? 1 : 0) ^ v[1];
    });
    st.state.coherent_eval({kB}, kY, [&](std::span<const uint64_t> v) {
        return y_of(v[0]);
    });
    st.state.coherent_eval({kB}, kX, [&](std::span<const uint64_t> v) {
        return p.inverse_value(y_of(v[0]));
    });
    st.state.discard_zeroed(kZ);
    st.state.discard_zeroed(kY);
    st.state.discard_zeroed(kX);
    return std::move(st.state);
}

}  // namespace qcommit::novy
