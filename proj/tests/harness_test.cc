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


#include "qcommit/harness.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qcommit/oracles.h"

using namespace qcommit;

namespace {

const double kHalf = std::sqrt(0.5);

ScenarioConfig honest(Protocol protocol, size_t n, bool b, bool unveil = true) {
    ScenarioConfig c;
    c.protocol = protocol;
    c.n = n;
    c.b = b;
    c.unveil = unveil;
    return c;
}

ScenarioConfig attack(Protocol protocol, size_t n, Amplitude alpha, Amplitude beta, bool unveil = true) {
    ScenarioConfig c;
    c.protocol = protocol;
    c.n = n;
    c.psi = {alpha, beta};
    c.unveil = unveil;
    return c;
}

double total(const ProbabilityTable &t) {
    double s = 0;
    for (const auto &[k, p] : t) {
        s += p;
    }
    return s;
}

}  // namespace

TEST(harness, total_variation_examples) {
    ProbabilityTable p{{"a", 0.5}, {"b", 0.5}};
    ASSERT_EQ(total_variation(p, p), 0.0);
    ASSERT_EQ(total_variation(ProbabilityTable{{"a", 1}}, ProbabilityTable{{"b", 1}}), 1.0);
    ASSERT_NEAR(total_variation(p, ProbabilityTable{{"a", 0.25}, {"b", 0.75}}), 0.25, 1e-15);
    ASSERT_NEAR(total_variation(Distribution{{0, 0.5}, {1, 0.5}}, Distribution{{0, 0.25}, {1, 0.75}}), 0.25, 1e-15);
}

TEST(harness, scripted_coins_explore_every_branch) {
    auto table = explore([](CoinSource &coins) {
        const double w[] = {0.25, 0.75};
        size_t a = coins.weighted(w);
        uint64_t b = coins.uniform(3);
        uint64_t c = coins.uniform_where(4, [](uint64_t v) {
            return v != 2;
        });
        return std::to_string(a) + std::to_string(b) + std::to_string(c);
    });
    ASSERT_EQ(table.size(), 2 * 3 * 3);
    ASSERT_NEAR(table["000"], 0.25 / 9, 1e-15);
    ASSERT_NEAR(table["123"], 0.75 / 9, 1e-15);
    ASSERT_EQ(table.count("002"), 0);
    ASSERT_NEAR(total(table), 1, 1e-15);
}

TEST(harness, explorer_matches_direct_enumeration) {
    for (size_t n : {2, 3}) {
        for (bool b : {false, true}) {
            for (bool unveil : {false, true}) {
                auto got = exact_transcript_distribution(honest(Protocol::kNovyHonest, n, b, unveil));
                auto want = oracles::novy_honest_view(n, b, 5, 3, unveil);
                ASSERT_LT(total_variation(got, want), 1e-12);
                ASSERT_EQ(got.size(), want.size());
            }
        }
    }
    for (size_t n : {1, 2, 3}) {
        for (bool b : {false, true}) {
            auto got = exact_transcript_distribution(honest(Protocol::kTwoProverHonest, n, b));
            auto want = oracles::two_prover_honest_view(n, b, false, true);
            ASSERT_LT(total_variation(got, want), 1e-12);
        }
    }
    ScenarioConfig zero = honest(Protocol::kTwoProverHonest, 2, true);
    zero.allow_zero_m1 = true;
    ASSERT_LT(total_variation(exact_transcript_distribution(zero), oracles::two_prover_honest_view(2, true, true, true)),
              1e-12);
}

TEST(harness, honest_views_conceal) {
    auto b0 = exact_transcript_distribution(honest(Protocol::kNovyHonest, 2, false, false));
    auto b1 = exact_transcript_distribution(honest(Protocol::kNovyHonest, 2, true, false));
    ASSERT_LT(total_variation(b0, b1), 1e-12);
    auto z0 = exact_transcript_distribution(honest(Protocol::kTwoProverHonest, 1, false, false));
    ASSERT_EQ(z0.size(), 2);
    for (const auto &[k, p] : z0) {
        ASSERT_NEAR(p, 0.5, 1e-15);
    }
}

TEST(harness, zero_m1_still_conceals) {
    ScenarioConfig c0 = honest(Protocol::kTwoProverHonest, 1, false, false);
    ScenarioConfig c1 = honest(Protocol::kTwoProverHonest, 1, true, false);
    c0.allow_zero_m1 = c1.allow_zero_m1 = true;
    ASSERT_LT(total_variation(exact_transcript_distribution(c0), exact_transcript_distribution(c1)), 1e-12);
}

TEST(harness, tables_sum_to_one) {
    for (const auto &c : {attack(Protocol::kNovyAttack, 3, 0.6, Amplitude(0, 0.8)),
                          attack(Protocol::kTwoProverAttack, 3, kHalf, kHalf, false),
                          honest(Protocol::kNovyHonest, 3, true)}) {
        ASSERT_NEAR(total(exact_transcript_distribution(c)), 1, 1e-10);
    }
}

TEST(harness, attack_equals_honest_mixture) {
    for (double q : {0.0, 0.25, 0.5, 1.0}) {
        Amplitude alpha = std::sqrt(1 - q);
        Amplitude beta = std::sqrt(q);
        auto a = exact_transcript_distribution(attack(Protocol::kNovyAttack, 3, alpha, beta));
        auto h = honest_bernoulli_mixture(honest(Protocol::kNovyHonest, 3, false), q);
        ASSERT_LT(total_variation(a, h), 1e-10) << q;
        auto a2 = exact_transcript_distribution(attack(Protocol::kTwoProverAttack, 2, alpha, beta));
        auto h2 = honest_bernoulli_mixture(honest(Protocol::kTwoProverHonest, 2, false), q);
        ASSERT_LT(total_variation(a2, h2), 1e-10) << q;
    }
}

TEST(harness, attack_differs_from_wrong_mixture) {
    auto a = exact_transcript_distribution(attack(Protocol::kNovyAttack, 2, kHalf, kHalf));
    auto h = honest_bernoulli_mixture(honest(Protocol::kNovyHonest, 2, false), 0.25);
    ASSERT_GT(total_variation(a, h), 0.2);
}

TEST(harness, two_prover_measurement_order_commutes) {
    RunOptions alyson_first;
    alyson_first.measure_order = twoprover::MeasureOrder::kAlysonFirst;
    ScenarioConfig c = attack(Protocol::kTwoProverAttack, 2, 0.6, Amplitude(0, 0.8));
    ASSERT_LT(total_variation(exact_transcript_distribution(c), exact_transcript_distribution(c, alyson_first)), 1e-12);
}

TEST(harness, enumeration_bounds) {
    ASSERT_THROW(exact_transcript_distribution(honest(Protocol::kNovyHonest, 4, false)), EnumerationBoundError);
    ASSERT_THROW(exact_transcript_distribution(honest(Protocol::kTwoProverHonest, 4, false)), EnumerationBoundError);
}

TEST(harness, run_protocol_examples) {
    SeededCoins coins(1);
    ProtocolRun h = run_protocol(honest(Protocol::kNovyHonest, 3, false), coins);
    ASSERT_TRUE(h.outcome.unveiled);
    ASSERT_EQ(h.outcome.accepted, true);

    ProtocolRun a = run_protocol(attack(Protocol::kTwoProverAttack, 3, 0, 1), coins);
    ASSERT_EQ(a.outcome.unveiled_bit, true);
    ASSERT_EQ(a.outcome.accepted, true);

    ProtocolRun r = run_protocol(attack(Protocol::kNovyAttack, 4, 0.6, Amplitude(0, 0.8), false), coins);
    ASSERT_FALSE(r.outcome.unveiled);
    ASSERT_GE(r.outcome.fidelity.value(), 1 - 1e-9);
}

TEST(harness, run_trials_examples) {
    TrialReport a = run_trials(attack(Protocol::kTwoProverAttack, 3, 0.6, 0.8, false), 100, 1);
    ASSERT_TRUE(a.invariants_ok());
    ASSERT_GE(a.min_fidelity.value(), 1 - 1e-9);
    ASSERT_FALSE(a.acceptance_rate.has_value());

    TrialReport h = run_trials(honest(Protocol::kNovyHonest, 4, true), 100, 1);
    ASSERT_EQ(h.acceptance_rate, 1.0);
    ASSERT_EQ(h.b_counts[1], 100u);
}

TEST(harness, parallel_matches_serial) {
    ScenarioConfig c = attack(Protocol::kNovyAttack, 5, 0.6, Amplitude(0, 0.8));
    TrialReport p = run_trials(c, 3000, 42);
    TrialReport s = run_trials_serial(c, 3000, 42);
    ASSERT_EQ(report_to_json(p).dump(), report_to_json(s).dump());
}

TEST(harness, reports_are_deterministic) {
    ScenarioConfig c = attack(Protocol::kTwoProverAttack, 4, kHalf, kHalf);
    std::string a = emit_report(run_trials(c, 500, 9), ReportFormat::kJson);
    std::string b = emit_report(run_trials(c, 500, 9), ReportFormat::kJson);
    ASSERT_EQ(a, b);
    ASSERT_NE(a, emit_report(run_trials(c, 500, 10), ReportFormat::kJson));
}

TEST(harness, json_report_round_trip) {
    ScenarioConfig c = honest(Protocol::kNovyHonest, 3, true);
    c.trials = 20;
    c.seed = 3;
    TrialReport r = run_trials(c, c.trials, c.seed);
    auto j = nlohmann::json::parse(emit_report(r, ReportFormat::kJson));
    ASSERT_EQ(ScenarioConfig::from_json(j["config"]).to_json(), c.to_json());
    ASSERT_EQ(j["trials"], 20);
    ASSERT_EQ(j["unveiled"], r.unveiled);
    ASSERT_EQ(j["accepted"], r.accepted);
    ASSERT_EQ(j["acceptance_rate"], 1.0);
    ASSERT_EQ(j["b_counts"][1], 20);
    ASSERT_EQ(j["invariants_ok"], true);
    ASSERT_EQ(Transcript::from_json(j["transcript_sample"]), r.transcript_sample);
    ASSERT_FALSE(j.contains("wall_clock_seconds"));
    ASSERT_TRUE(report_to_json(r, true).contains("wall_clock_seconds"));
}

TEST(harness, text_report) {
    TrialReport r = run_trials(honest(Protocol::kNovyHonest, 2, false), 10, 0);
    std::string text = emit_report(r, ReportFormat::kText);
    ASSERT_NE(text.find("acceptance_rate: 1\n"), std::string::npos);
    ASSERT_NE(text.find("invariants: ok\n"), std::string::npos);
    ASSERT_THROW(parse_report_format("xml"), std::invalid_argument);
    ASSERT_EQ(parse_report_format("text"), ReportFormat::kText);
}

TEST(harness, empirical_matches_exact) {
    ScenarioConfig c = attack(Protocol::kNovyAttack, 2, 0.6, Amplitude(0, 0.8));
    auto exact = exact_transcript_distribution(c);
    const uint64_t trials = 10'000;
    std::map<std::string, uint64_t> counts;
    for (uint64_t k = 0; k < trials; k++) {
        SeededCoins coins = SeededCoins::for_trial(77, k);
        counts[outcome_key(run_protocol(c, coins))]++;
    }
    for (const auto &[key, count] : counts) {
        ASSERT_TRUE(exact.count(key)) << key;
    }
    for (const auto &[key, p] : exact) {
        double n = static_cast<double>(trials);
        EXPECT_LE(std::abs(static_cast<double>(counts[key]) - n * p), 3 * std::sqrt(n * p * (1 - p))) << key;
    }
}

TEST(harness, config_validation) {
    auto parse = [](const char *text) {
        return ScenarioConfig::from_json(nlohmann::json::parse(text));
    };
    ScenarioConfig c = parse(R"({"protocol": "novy-attack", "n": 3, "psi": {"alpha": 0.6, "beta": [0, 0.8]},
                                 "perm": {"a": 7, "c": 1}, "unveil": false, "trials": 5, "seed": 11})");
    ASSERT_EQ(c.protocol, Protocol::kNovyAttack);
    ASSERT_EQ(c.perm_a, 7u);
    ASSERT_EQ(c.psi->second, Amplitude(0, 0.8));
    ASSERT_EQ(ScenarioConfig::from_json(c.to_json()).to_json(), c.to_json());
    ASSERT_TRUE(parse(R"({"protocol": "2p-honest", "n": 1, "b": true})").b.value());

    for (const char *bad : {
             R"({"protocol": "novy-attack", "n": 3, "b": 1})",
             R"({"protocol": "novy-honest", "n": 3, "psi": {"alpha": 1, "beta": 0}})",
             R"({"protocol": "novy-honest", "n": 3})",
             R"({"protocol": "novy-honest", "n": 3, "b": 2})",
             R"({"protocol": "novy-attack", "n": 3, "psi": {"alpha": 0.6, "beta": 0.7}})",
             R"({"protocol": "novy-honest", "n": 1, "b": 0})",
             R"({"protocol": "2p-honest", "n": 0, "b": 0})",
             R"({"protocol": "novy-honest", "n": 3, "b": 0, "perm": {"a": 4, "c": 0}})",
             R"({"protocol": "novy-honest", "n": 3, "b": 0, "allow_zero_m1": true})",
             R"({"protocol": "novy-honest", "n": 3, "b": 0, "trials": 0})",
             R"({"protocol": "novy-honest", "n": 3, "b": 0, "colour": "red"})",
             R"({"protocol": "3p-honest", "n": 3, "b": 0})",
             R"([1, 2])",
         }) {
        ASSERT_THROW(parse(bad), ConfigError) << bad;
    }
}
