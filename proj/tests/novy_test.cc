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

#include <gtest/gtest.h>

#include <cmath>

#include "qcommit/oracles.h"

using namespace qcommit;

namespace {

const Amplitude kI{0, 1};
const double kHalf = std::sqrt(0.5);

}  // namespace

TEST(novy, honest_answers_match_both_solutions) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        for (bool b : {false, true}) {
            ToyPermutation p(3);
            SeededCoins coins(seed);
            auto c = novy::honest_commit(b, 3, p, coins);
            novy::CommitView view = novy::read_commit(c.transcript);
            auto [y0, y1] = view.solutions();
            ASSERT_LT(y0, y1);
            for (size_t i = 0; i < view.hashes.num_rows(); i++) {
                ASSERT_EQ(dot(view.hashes[i], y0), view.answers[i]);
                ASSERT_EQ(dot(view.hashes[i], y1), view.answers[i]);
            }
            ASSERT_EQ(c.alice.z ^ b, c.alice.a);
            ASSERT_EQ(c.alice.a ? y1 : y0, c.alice.y);
            ASSERT_EQ(c.alice.y, p.forward(c.alice.x));
        }
    }
}

TEST(novy, honest_transcript_shape) {
    ToyPermutation p(4);
    SeededCoins coins(3);
    auto c = novy::honest_commit(true, 4, p, coins);
    const auto &m = c.transcript.messages();
    ASSERT_EQ(m.size(), 2 * 3 + 1);
    ASSERT_EQ(m[0].name, "h_1");
    ASSERT_EQ(m[0].sender, PartyId::kBob);
    ASSERT_EQ(m[1].name, "r_1");
    ASSERT_EQ(m[1].sender, PartyId::kAlice);
    ASSERT_EQ(m.back().name, "z");
    ASSERT_EQ(rank(c.alice.hashes), 3);
}

TEST(novy, honest_unveil_accepted) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        ToyPermutation p(3);
        SeededCoins coins(seed);
        bool b = seed & 1;
        auto c = novy::honest_commit(b, 3, p, coins);
        ASSERT_TRUE(novy::honest_unveil_check(c.transcript, b, c.alice.x, p));
        ASSERT_FALSE(novy::honest_unveil_check(c.transcript, !b, c.alice.x, p));
    }
}

TEST(novy, binding_is_computational) {
    // Knowing the permutation inverse, Alice can open either bit.
    ToyPermutation p(5);
    SeededCoins coins(17);
    auto c = novy::honest_commit(false, 5, p, coins);
    auto [y0, y1] = novy::read_commit(c.transcript).solutions();
    BitVector other = c.alice.y == y0 ? y1 : y0;
    BitVector x_prime = p.inverse(other);
    ASSERT_NE(x_prime, c.alice.x);
    ASSERT_TRUE(novy::honest_unveil_check(c.transcript, true, x_prime, p));
}

TEST(novy, honest_matches_direct_enumeration) {
    // Frequencies of Bob's view over seeds against the exact oracle table.
    const uint64_t trials = 20'000;
    ToyPermutation p(2);
    auto exact = oracles::novy_honest_view(2, true, 5, 3, false);
    std::map<std::string, uint64_t> counts;
    for (uint64_t k = 0; k < trials; k++) {
        SeededCoins coins = SeededCoins::for_trial(2, k);
        auto c = novy::honest_commit(true, 2, p, coins);
        counts[c.transcript.view_of(PartyId::kBob).canonical()]++;
    }
    ASSERT_EQ(counts.size(), exact.size());
    for (const auto &[key, prob] : exact) {
        double n = static_cast<double>(trials);
        double sigma = std::sqrt(n * prob * (1 - prob));
        EXPECT_LE(std::abs(static_cast<double>(counts[key]) - n * prob), 3 * sigma) << key;
    }
}

TEST(novy, rejects_bad_widths) {
    SeededCoins coins(0);
    ASSERT_THROW(novy::honest_commit(false, 1, ToyPermutation(1), coins), std::invalid_argument);
    ASSERT_THROW(novy::honest_commit(false, 3, ToyPermutation(4), coins), std::invalid_argument);
}

TEST(novy, read_commit_requires_hashes) {
    ASSERT_THROW(novy::read_commit(Transcript{}), TranscriptError);
}

TEST(novy, attack_pre_index_state) {
    ToyPermutation p(3);
    SeededCoins coins(5);
    auto st = novy::attack_setup(0.6, 0.8 * kI, 3, p);
    ASSERT_EQ(st.state.support_size(), 16);
    Transcript t;
    novy::attack_hash_round(st, t, coins);
    ASSERT_EQ(st.state.support_size(), 8);
    novy::attack_hash_round(st, t, coins);
    ASSERT_EQ(st.state.support_size(), 4);
    ASSERT_THROW(novy::attack_hash_round(st, t, coins), std::logic_error);
    for (const auto &term : st.state.terms()) {
        bool b = term.label >> 7;
        ASSERT_NEAR(std::abs(term.amplitude), (b ? 0.8 : 0.6) * kHalf, 1e-12);
    }
}

TEST(novy, attack_post_commit_matches_oracle) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        ToyPermutation p(4);
        SeededCoins coins(seed);
        auto c = novy::attack_commit(kHalf, kHalf * kI, 4, p, coins);
        auto view = novy::read_commit(c.transcript);
        auto ys = oracles::brute_force_solve(view.hashes, view.answers);
        ASSERT_EQ(ys.size(), 2);
        auto want = oracles::novy_post_commit_terms(kHalf, kHalf * kI, view.z, ys[0], ys[1], 5, 3);
        auto got = c.st.state.terms();
        ASSERT_EQ(got.size(), want.size());
        for (size_t k = 0; k < want.size(); k++) {
            ASSERT_EQ(got[k].label, want[k].label);
            ASSERT_LE(std::abs(got[k].amplitude - want[k].amplitude), 1e-10);
        }
    }
}

TEST(novy, attack_support_bound) {
    for (size_t n = 2; n <= 8; n++) {
        ToyPermutation p(n);
        SeededCoins coins(n);
        auto st = novy::attack_setup(kHalf, kHalf, n, p);
        Transcript t;
        ASSERT_LE(st.state.support_size(), size_t{2} << n);
        for (size_t i = 1; i < n; i++) {
            novy::attack_hash_round(st, t, coins);
            ASSERT_LE(st.state.support_size(), size_t{2} << n);
        }
        novy::attack_announce_index(st, t, coins);
        ASSERT_LE(st.state.support_size(), 2);
    }
}

TEST(novy, attack_unveil_zero_state) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        ToyPermutation p(4);
        SeededCoins coins(seed);
        auto c = novy::attack_commit(1, 0, 4, p, coins);
        auto u = novy::attack_unveil(c.st, coins);
        ASSERT_FALSE(u.b);
        ASSERT_TRUE(novy::honest_unveil_check(c.transcript, u.b, u.x, p));
    }
}

TEST(novy, attack_opening_indexes_by_z_xor_b) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        ToyPermutation p(5);
        SeededCoins coins(seed);
        auto c = novy::attack_commit(kHalf, kHalf, 5, p, coins);
        auto u = novy::attack_unveil(c.st, coins);
        auto [y0, y1] = novy::read_commit(c.transcript).solutions();
        ASSERT_EQ(p.forward(u.x), (c.st.z ^ u.b) ? y1 : y0);
        ASSERT_TRUE(novy::honest_unveil_check(c.transcript, u.b, u.x, p));
    }
}

TEST(novy, recover_basis_state_exactly) {
    ToyPermutation p(4);
    SeededCoins coins(8);
    auto c = novy::attack_commit(0, 1, 4, p, coins);
    SparseState s = novy::attack_recover(std::move(c.st), p);
    ASSERT_EQ(s.dump(), "1 1 0\n");
}

TEST(novy, recover_complex_state) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        ToyPermutation p(6);
        SeededCoins coins(seed);
        auto c = novy::attack_commit(kHalf, kHalf * kI, 6, p, coins);
        SparseState s = novy::attack_recover(std::move(c.st), p);
        ASSERT_GE(s.fidelity_pure(novy::kB, kHalf, kHalf * kI), 1 - 1e-9);
    }
}

TEST(novy, recover_after_early_measurement_is_not_coherent) {
    ToyPermutation p(3);
    SeededCoins coins(1);
    novy::AttackOptions early;
    early.measure_controls_early = true;
    auto c = novy::attack_commit(kHalf, kHalf, 3, p, coins, early);
    SparseState s = novy::attack_recover(std::move(c.st), p);
    ASSERT_NEAR(s.fidelity_pure(novy::kB, kHalf, kHalf), 0.5, 1e-12);
}
