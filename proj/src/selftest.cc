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

#include "qcommit/selftest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "qcommit/gf2.h"
#include "qcommit/harness.h"
#include "qcommit/novy.h"
#include "qcommit/oracles.h"
#include "qcommit/perm.h"
#include "qcommit/qsim.h"
#include "qcommit/twoprover.h"

namespace qcommit {

namespace {

constexpr double kFidelityFloor = 1 - 1e-9;
constexpr double kGoldenTolerance = 1e-10;
constexpr double kConcealmentTolerance = 1e-12;
constexpr double kEquivalenceTolerance = 1e-10;
constexpr double kNormCheck = 1e-10;
constexpr uint64_t kSeed = 20261016;

const Amplitude kI{0, 1};
const double kHalf = std::sqrt(0.5);

void expect(bool condition, const std::string &message) {
    if (!condition) {
        throw std::runtime_error(message);
    }
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

/// |count - trials*p| <= 3 sigma of the binomial.
bool within_three_sigma(uint64_t count, uint64_t trials, double p) {
    double n = static_cast<double>(trials);
    return std::abs(static_cast<double>(count) - n * p) <= 3 * std::sqrt(n * p * (1 - p)) + 1e-9;
}

std::pair<Amplitude, Amplitude> random_psi(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Amplitude a{g(rng), g(rng)};
    Amplitude b{g(rng), g(rng)};
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    return {a / norm, b / norm};
}

ScenarioConfig make_config(Protocol protocol, size_t n, bool unveil) {
    ScenarioConfig c;
    c.protocol = protocol;
    c.n = n;
    c.unveil = unveil;
    return c;
}

ScenarioConfig honest(Protocol protocol, size_t n, bool b, bool unveil) {
    ScenarioConfig c = make_config(protocol, n, unveil);
    c.b = b;
    return c;
}

ScenarioConfig attack(Protocol protocol, size_t n, Amplitude alpha, Amplitude beta, bool unveil) {
    ScenarioConfig c = make_config(protocol, n, unveil);
    c.psi = {alpha, beta};
    return c;
}

std::string novy_attack_completeness() {
    ScenarioConfig c = attack(Protocol::kNovyAttack, 6, kHalf, kHalf, true);
    TrialReport r = run_trials(c, 10'000, kSeed);
    expect(r.violations.empty(), r.violations.empty() ? "" : r.violations.front());
    expect(r.unveiled == 10'000, "not every trial unveiled");
    expect(r.acceptance_rate == 1.0, "acceptance rate " + num(r.acceptance_rate.value_or(0)));
    expect(within_three_sigma(r.b_counts[1], r.unveiled, 0.5),
           "b=1 count " + std::to_string(r.b_counts[1]) + " outside 3 sigma of 5000");
    return "acceptance 1.0, b=1 count " + std::to_string(r.b_counts[1]) + "/10000";
}

std::string novy_recovery() {
    std::mt19937_64 rng(kSeed);
    double min_fidelity = 1;
    for (int k = 0; k < 100; k++) {
        size_t n = 3 + k % 6;
        auto [alpha, beta] = random_psi(rng);
        ToyPermutation perm(n);
        SeededCoins coins = SeededCoins::for_trial(kSeed, k);
        auto commit = novy::attack_commit(alpha, beta, n, perm, coins);
        // attack_recover discards X and Y with discard_zeroed, which throws
        // UncomputationError if either is still entangled.
        SparseState recovered = novy::attack_recover(std::move(commit.st), perm);
        expect(recovered.layout().registers().size() == 1, "registers left besides B");
        expect(recovered.support_size() <= 2, "recovered support larger than 2");
        min_fidelity = std::min(min_fidelity, recovered.fidelity_pure(novy::kB, alpha, beta));
    }
    expect(min_fidelity >= kFidelityFloor, "min fidelity " + num(min_fidelity));
    return "1 - min fidelity over 100 states = " + num(1 - min_fidelity);
}

void compare_terms(std::span<const BasisTerm> got, const std::vector<BasisTerm> &want, const std::string &what) {
    expect(got.size() == want.size(), what + ": support size " + std::to_string(got.size()) + " != " +
                                          std::to_string(want.size()));
    for (size_t k = 0; k < want.size(); k++) {
        expect(got[k].label == want[k].label, what + ": label mismatch");
        expect(std::abs(got[k].amplitude - want[k].amplitude) <= kGoldenTolerance, what + ": amplitude mismatch");
    }
}

std::string post_commit_golden() {
    const size_t n = 3;
    const Amplitude alpha = 0.6;
    const Amplitude beta = 0.8 * kI;
    ToyPermutation perm(n);
    bool seen[2] = {false, false};
    for (uint64_t trial = 0; trial < 64 && !(seen[0] && seen[1]); trial++) {
        SeededCoins coins = SeededCoins::for_trial(kSeed, trial);
        novy::AttackState st = novy::attack_setup(alpha, beta, n, perm);
        Transcript t;
        for (size_t i = 1; i < n; i++) {
            novy::attack_hash_round(st, t, coins);
        }
        auto pre_index = std::vector<BasisTerm>(st.state.terms().begin(), st.state.terms().end());
        novy::attack_announce_index(st, t, coins);

        novy::CommitView view = novy::read_commit(t);
        auto solutions = oracles::brute_force_solve(view.hashes, view.answers);
        expect(solutions.size() == 2, "hash answers do not leave exactly two candidates");
        const BitVector &y0 = solutions[0];
        const BitVector &y1 = solutions[1];

        // Before Z: (alpha|0> + beta|1>) (|x0,y0> + |x1,y1>) / sqrt 2.
        std::vector<BasisTerm> four;
        for (bool z : {false, true}) {
            for (const auto &term : oracles::novy_post_commit_terms(alpha, beta, z, y0, y1, perm.multiplier(),
                                                                    perm.offset())) {
                four.push_back({term.label & ~uint64_t{1}, term.amplitude * kHalf});
            }
        }
        std::sort(four.begin(), four.end(), [](const BasisTerm &a, const BasisTerm &b) {
            return a.label < b.label;
        });
        compare_terms(pre_index, four, "pre-index state");

        auto want = oracles::novy_post_commit_terms(alpha, beta, st.z, y0, y1, perm.multiplier(), perm.offset());
        compare_terms(st.state.terms(), want, st.z ? "z=1 state" : "z=0 state");
        seen[st.z] = true;
    }
    expect(seen[0] && seen[1], "did not observe both z branches");
    return "z=0 and z=1 two-term states and the four-term pre-index state match to 1e-10";
}

std::string two_prover_attack() {
    const size_t n = 4;
    const uint64_t trials = 10'000;
    uint64_t accepted = 0;
    for (uint64_t k = 0; k < trials; k++) {
        SeededCoins coins = SeededCoins::for_trial(kSeed, k);
        auto st = twoprover::attack_init(n);
        twoprover::attack_commit(st, kHalf, kHalf, coins);
        auto u = twoprover::attack_unveil(st, coins);
        BitVector expected = st.z ^ (u.b ? st.m1 : st.m0);
        expect(u.r == expected && u.r_prime == expected, "trial " + std::to_string(k) + ": r, r', z^m_b disagree");
        accepted += twoprover::honest_unveil_check(st.transcript, u.b, u.r, u.r_prime) ? 1 : 0;
    }
    expect(accepted == trials, "acceptance " + std::to_string(accepted) + "/" + std::to_string(trials));

    std::mt19937_64 rng(kSeed);
    double min_fidelity = 1;
    for (int k = 0; k < 100; k++) {
        auto [alpha, beta] = random_psi(rng);
        SeededCoins coins = SeededCoins::for_trial(kSeed + 1, k);
        auto st = twoprover::attack_init(n);
        twoprover::attack_commit(st, alpha, beta, coins);
        twoprover::reunite(st);
        SparseState recovered = twoprover::attack_recover(st);
        min_fidelity = std::min(min_fidelity, recovered.fidelity_pure(twoprover::kB, alpha, beta));
    }
    expect(min_fidelity >= kFidelityFloor, "min recovery fidelity " + num(min_fidelity));

    SeededCoins coins(kSeed);
    auto st = twoprover::attack_init(n);
    twoprover::attack_commit(st, 0.6, 0.8, coins);
    bool breached = false;
    try {
        twoprover::attack_recover(st);
    } catch (const SeparationBreach &) {
        breached = true;
    }
    expect(breached, "recovery during separation did not raise a separation breach");
    return "acceptance 1.0 with r = r' = z^m_b over 10000 trials; 1 - min recovery fidelity = " +
           num(1 - min_fidelity) + "; early recovery rejected";
}

std::string concealment() {
    double worst = 0;
    const std::vector<std::pair<Amplitude, Amplitude>> states{{1, 0}, {0, 1}, {kHalf, kHalf}, {0.6, 0.8 * kI}};
    for (Protocol honest_p : {Protocol::kNovyHonest, Protocol::kTwoProverHonest}) {
        bool novy = honest_p == Protocol::kNovyHonest;
        Protocol attack_p = novy ? Protocol::kNovyAttack : Protocol::kTwoProverAttack;
        for (size_t n = novy ? 2 : 1; n <= 3; n++) {
            auto view0 = exact_transcript_distribution(honest(honest_p, n, false, false));
            auto view1 = exact_transcript_distribution(honest(honest_p, n, true, false));
            double tv = total_variation(view0, view1);
            expect(tv < kConcealmentTolerance, std::string(to_string(honest_p)) + " n=" + std::to_string(n) +
                                                   ": b=0 vs b=1 TV " + num(tv));
            worst = std::max(worst, tv);

            auto oracle0 = novy ? oracles::novy_honest_view(n, false, 5, 3, false)
                                : oracles::two_prover_honest_view(n, false, false, false);
            double tv_oracle = total_variation(view0, oracle0);
            expect(tv_oracle < kConcealmentTolerance, "enumerated view disagrees with direct oracle");

            for (const auto &[alpha, beta] : states) {
                auto attack_view = exact_transcript_distribution(attack(attack_p, n, alpha, beta, false));
                double tv_attack = total_variation(view0, attack_view);
                expect(tv_attack < kConcealmentTolerance,
                       std::string(to_string(attack_p)) + " n=" + std::to_string(n) + ": view TV " + num(tv_attack));
                worst = std::max(worst, tv_attack);
            }
        }
    }
    return "max TV " + num(worst) + " (NOVY n=2..3, 2P n=1..3)";
}

std::string transcript_equivalence() {
    double worst = 0;
    for (double q : {0.0, 0.5, 1.0}) {
        Amplitude alpha = std::sqrt(1 - q);
        Amplitude beta = std::sqrt(q);
        for (size_t n : {2, 3}) {
            auto a = exact_transcript_distribution(attack(Protocol::kNovyAttack, n, alpha, beta, true));
            auto h = honest_bernoulli_mixture(honest(Protocol::kNovyHonest, n, false, true), q);
            double tv = total_variation(a, h);
            expect(tv < kEquivalenceTolerance, "NOVY n=" + std::to_string(n) + " q=" + num(q) + ": TV " + num(tv));
            worst = std::max(worst, tv);
        }
        for (size_t n : {1, 2}) {
            auto a = exact_transcript_distribution(attack(Protocol::kTwoProverAttack, n, alpha, beta, true));
            auto h = honest_bernoulli_mixture(honest(Protocol::kTwoProverHonest, n, false, true), q);
            double tv = total_variation(a, h);
            expect(tv < kEquivalenceTolerance, "2P n=" + std::to_string(n) + " q=" + num(q) + ": TV " + num(tv));
            worst = std::max(worst, tv);
        }
    }
    return "max TV " + num(worst) + " over q in {0, 1/2, 1}";
}

std::string commuting_controls() {
    double worst = 0;
    const std::vector<std::pair<Amplitude, Amplitude>> states{
        {kHalf, kHalf}, {0.6, 0.8 * kI}, {std::sqrt(0.3), std::sqrt(0.7)}};
    RunOptions early;
    early.measure_controls_early = true;
    for (size_t n : {2, 3}) {
        for (const auto &[alpha, beta] : states) {
            ScenarioConfig c = attack(Protocol::kNovyAttack, n, alpha, beta, true);
            double tv = total_variation(exact_transcript_distribution(c), exact_transcript_distribution(c, early));
            expect(tv < kEquivalenceTolerance, "n=" + std::to_string(n) + ": early vs late TV " + num(tv));
            worst = std::max(worst, tv);
        }
    }
    return "max TV " + num(worst) + " between early and unveil-time measurement of B, X";
}

std::string gf2_oracle() {
    uint64_t checked = 0;
    for (size_t n = 1; n <= 3; n++) {
        for (size_t m = 0; m <= n; m++) {
            for (uint64_t rows = 0; rows < (uint64_t{1} << (n * m)); rows++) {
                BitMatrix h(n);
                for (size_t k = 0; k < m; k++) {
                    h.add_row(BitVector::from_value((rows >> (k * n)) & low_mask(n), n));
                }
                expect(rank(h) == oracles::brute_force_rank(h), "rank mismatch");
                for (uint64_t r = 0; r < (uint64_t{1} << m); r++) {
                    BitVector rhs = BitVector::from_value(r, m);
                    expect(solve_affine(h, rhs) == oracles::brute_force_solve(h, rhs),
                           "solve_affine mismatch at n=" + std::to_string(n));
                    checked++;
                }
            }
        }
    }
    std::mt19937_64 rng(kSeed);
    for (int k = 0; k < 1000; k++) {
        size_t n = 4 + k % 3;
        size_t m = std::uniform_int_distribution<size_t>(0, n)(rng);
        BitMatrix h(n);
        for (size_t i = 0; i < m; i++) {
            h.add_row(BitVector::from_value(rng() & low_mask(n), n));
        }
        BitVector rhs = BitVector::from_value(rng() & low_mask(m), m);
        expect(solve_affine(h, rhs) == oracles::brute_force_solve(h, rhs), "random solve_affine mismatch");
        checked++;
    }
    SeededCoins coins(kSeed);
    for (int k = 0; k < 1000; k++) {
        size_t n = 2 + k % 7;
        size_t m = k % (n + 1);
        BitMatrix h = sample_independent_rows(m, n, coins);
        expect(h.num_rows() == m && rank(h) == m, "sampled matrix is rank deficient");
    }
    return std::to_string(checked) + " systems match brute force; 1000 sampled matrices have full row rank";
}

std::string simulator_invariants() {
    auto check_norm = [](const SparseState &s, const char *op) {
        expect(std::abs(s.norm_squared() - 1) <= kNormCheck, std::string("norm drift after ") + op);
    };
    SparseState s(RegisterLayout{{"A", 1}, {"X", 3}, {"Y", 3}, {"S", 2}});
    check_norm(s, "init");
    s.prepare_qubit("A", 0.6, 0.8 * kI);
    check_norm(s, "prepare_qubit");
    s.uniform_superpose("X");
    check_norm(s, "uniform_superpose");
    const double p[] = {0.1, 0.2, 0.3, 0.4};
    s.coherent_sample("S", p);
    check_norm(s, "coherent_sample");
    auto before = std::vector<BasisTerm>(s.terms().begin(), s.terms().end());
    Oracle f = [](std::span<const uint64_t> v) {
        return (v[0] * 3 + v[1] + v[2]) & 7;
    };
    s.coherent_eval({"X", "A", "S"}, "Y", f);
    check_norm(s, "coherent_eval");
    expect(std::vector<BasisTerm>(s.terms().begin(), s.terms().end()) != before, "coherent_eval was a no-op");
    s.coherent_eval({"X", "A", "S"}, "Y", f);
    expect(std::vector<BasisTerm>(s.terms().begin(), s.terms().end()) == before, "coherent_eval is not self-inverse");
    s.allocate("E", 2);
    s.allocate("E2", 2);
    s.prepare_epr_pairs("E", "E2");
    check_norm(s, "prepare_epr_pairs");
    SeededCoins coins(kSeed);
    s.measure({"X", "E"}, coins);
    check_norm(s, "measure");

    const uint64_t trials = 10'000;
    uint64_t ones = 0;
    uint64_t sampled_ones = 0;
    for (uint64_t k = 0; k < trials; k++) {
        SeededCoins c = SeededCoins::for_trial(kSeed, k);
        SparseState q(RegisterLayout{{"Q", 1}});
        q.prepare_qubit("Q", 0.6, 0.8 * kI);
        ones += q.measure({"Q"}, c).outcome[0];
        SparseState r(RegisterLayout{{"Q", 1}});
        const double table[] = {0.25, 0.75};
        r.coherent_sample("Q", table);
        sampled_ones += r.measure({"Q"}, c).outcome[0];
    }
    expect(within_three_sigma(ones, trials, 0.64), "Born frequency " + std::to_string(ones) + " vs 6400");
    expect(within_three_sigma(sampled_ones, trials, 0.75), "Born frequency " + std::to_string(sampled_ones) + " vs 7500");
    return "norm held after every operation; double evaluation exact; Born counts " + std::to_string(ones) +
           "/10000 (p=0.64), " + std::to_string(sampled_ones) + "/10000 (p=0.75)";
}

}  // namespace

const std::vector<Criterion> &acceptance_criteria() {
    static const std::vector<Criterion> criteria{
        {1, "NOVY attack completeness", 10, novy_attack_completeness},
        {2, "NOVY recovery", 10, novy_recovery},
        {3, "NOVY post-commit state golden check", 1, post_commit_golden},
        {4, "Two-prover attack", 10, two_prover_attack},
        {5, "Exact concealment", 30, concealment},
        {6, "Transcript equivalence", 30, transcript_equivalence},
        {7, "Commuting controls", 10, commuting_controls},
        {8, "GF(2) solver oracle", 5, gf2_oracle},
        {9, "Simulator unit invariants", 5, simulator_invariants},
    };
    return criteria;
}

CriterionResult run_criterion(const Criterion &criterion) {
    CriterionResult result{criterion.id, criterion.title, false, "", 0, criterion.budget_seconds};
    auto start = std::chrono::steady_clock::now();
    try {
        result.detail = criterion.check();
        result.passed = true;
    } catch (const std::exception &e) {
        result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.passed && result.seconds >= result.budget_seconds) {
        result.passed = false;
        result.detail = "over time budget: " + result.detail;
    }
    return result;
}

std::vector<CriterionResult> run_selftest(std::ostream &out) {
    std::vector<CriterionResult> results;
    for (const auto &criterion : acceptance_criteria()) {
        results.push_back(run_criterion(criterion));
        const auto &r = results.back();
        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.3fs / %.0fs", r.seconds, r.budget_seconds);
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << timing << "): " << r.detail
            << "\n";
        out.flush();
    }
    return results;
}

}  // namespace qcommit
