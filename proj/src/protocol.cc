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

#include "qcommit/protocol.h"

#include <array>
#include <cmath>
#include <set>

#include "qcommit/novy.h"
#include "qcommit/perm.h"
#include "qcommit/qsim.h"

namespace qcommit {

namespace {

constexpr std::array<std::pair<Protocol, std::string_view>, 4> kProtocolNames{{
    {Protocol::kNovyHonest, "novy-honest"},
    {Protocol::kNovyAttack, "novy-attack"},
    {Protocol::kTwoProverHonest, "2p-honest"},
    {Protocol::kTwoProverAttack, "2p-attack"},
}};

constexpr size_t kMaxWidth = 20;
constexpr uint64_t kMaxTrials = 100'000'000;

Amplitude parse_amplitude(const nlohmann::json &j, const char *what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError(std::string("psi.") + what + " must be a number or a [re, im] pair");
}

nlohmann::json amplitude_json(Amplitude a) {
    return nlohmann::json::array({a.real(), a.imag()});
}

ProtocolRun run_novy(const ScenarioConfig &config, CoinSource &coins, const RunOptions &options) {
    ToyPermutation perm(config.n, config.perm_a, config.perm_c);
    ProtocolRun run;
    auto bob_verdict = [&](const Transcript &t) {
        return novy::honest_unveil_check(t, t.bit("b"), t.bits("x"), perm);
    };

    if (config.protocol == Protocol::kNovyHonest) {
        auto commit = novy::honest_commit(*config.b, config.n, perm, coins);
        run.transcript = std::move(commit.transcript);
        if (config.unveil) {
            novy::announce_unveil(run.transcript, commit.alice.b, commit.alice.x);
            run.outcome = {true, bob_verdict(run.transcript), commit.alice.b, std::nullopt};
        }
        return run;
    }

    auto [alpha, beta] = *config.psi;
    novy::AttackOptions attack_options;
    attack_options.measure_controls_early = options.measure_controls_early;
    auto commit = novy::attack_commit(alpha, beta, config.n, perm, coins, attack_options);
    run.transcript = std::move(commit.transcript);
    if (config.unveil) {
        auto u = novy::attack_unveil(commit.st, coins);
        novy::announce_unveil(run.transcript, u.b, u.x);
        run.outcome = {true, bob_verdict(run.transcript), u.b, std::nullopt};
    } else {
        SparseState recovered = novy::attack_recover(std::move(commit.st), perm);
        run.outcome.fidelity = recovered.fidelity_pure(novy::kB, alpha, beta);
    }
    return run;
}

ProtocolRun run_two_prover(const ScenarioConfig &config, CoinSource &coins, const RunOptions &options) {
    ProtocolRun run;
    auto bob_verdict = [](const Transcript &t) {
        return twoprover::honest_unveil_check(t, t.bit("b"), t.bits("r"), t.bits("r'"));
    };

    if (config.protocol == Protocol::kTwoProverHonest) {
        auto st = twoprover::honest_init(config.n, coins);
        twoprover::honest_commit(st, *config.b, coins, config.allow_zero_m1);
        if (config.unveil) {
            twoprover::honest_unveil(st);
            run.outcome = {true, bob_verdict(st.transcript), st.b, std::nullopt};
        }
        run.transcript = std::move(st.transcript);
        return run;
    }

    auto [alpha, beta] = *config.psi;
    auto st = twoprover::attack_init(config.n);
    twoprover::attack_commit(st, alpha, beta, coins, config.allow_zero_m1);
    if (config.unveil) {
        auto u = twoprover::attack_unveil(st, coins, options.measure_order);
        run.outcome = {true, bob_verdict(st.transcript), u.b, std::nullopt};
    } else {
        twoprover::reunite(st);
        SparseState recovered = twoprover::attack_recover(st);
        run.outcome.fidelity = recovered.fidelity_pure(twoprover::kB, alpha, beta);
    }
    run.transcript = std::move(st.transcript);
    return run;
}

}  // namespace

std::string_view to_string(Protocol protocol) {
    for (const auto &[p, name] : kProtocolNames) {
        if (p == protocol) {
            return name;
        }
    }
    return "?";
}

Protocol parse_protocol(std::string_view name) {
    for (const auto &[p, n] : kProtocolNames) {
        if (n == name) {
            return p;
        }
    }
    throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

bool ScenarioConfig::is_attack() const {
    return protocol == Protocol::kNovyAttack || protocol == Protocol::kTwoProverAttack;
}

bool ScenarioConfig::is_novy() const {
    return protocol == Protocol::kNovyHonest || protocol == Protocol::kNovyAttack;
}

void ScenarioConfig::validate() const {
    size_t min_n = is_novy() ? 2 : 1;
    if (n < min_n || n > kMaxWidth) {
        throw ConfigError("n must be in [" + std::to_string(min_n) + ", " + std::to_string(kMaxWidth) + "] for " +
                          std::string(to_string(protocol)));
    }
    if (is_attack()) {
        if (!psi.has_value()) {
            throw ConfigError("attack protocols need psi");
        }
        if (b.has_value()) {
            throw ConfigError("attack protocols take psi, not b");
        }
        double norm = std::norm(psi->first) + std::norm(psi->second);
        if (std::abs(norm - 1) > kNormTolerance) {
            throw ConfigError("psi is not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(norm));
        }
    } else {
        if (!b.has_value()) {
            throw ConfigError("honest protocols need b");
        }
        if (psi.has_value()) {
            throw ConfigError("honest protocols take b, not psi");
        }
    }
    if (is_novy()) {
        if (perm_a % 2 == 0) {
            throw ConfigError("perm.a must be odd");
        }
        if (allow_zero_m1) {
            throw ConfigError("allow_zero_m1 applies to two-prover protocols only");
        }
    }
    if (trials < 1 || trials > kMaxTrials) {
        throw ConfigError("trials must be in [1, " + std::to_string(kMaxTrials) + "]");
    }
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json &j) {
    static const std::set<std::string> known{"protocol", "n",      "b",    "psi",  "perm",
                                             "unveil",   "trials", "seed", "allow_zero_m1"};
    if (!j.is_object()) {
        throw ConfigError("scenario config must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    ScenarioConfig c;
    try {
        c.protocol = parse_protocol(j.at("protocol").get<std::string>());
        c.n = j.at("n").get<size_t>();
        if (j.contains("b")) {
            int b = j["b"].is_boolean() ? static_cast<int>(j["b"].get<bool>()) : j["b"].get<int>();
            if (b != 0 && b != 1) {
                throw ConfigError("b must be 0 or 1");
            }
            c.b = b == 1;
        }
        if (j.contains("psi")) {
            const auto &psi = j["psi"];
            c.psi = {parse_amplitude(psi.at("alpha"), "alpha"), parse_amplitude(psi.at("beta"), "beta")};
        }
        if (j.contains("perm")) {
            c.perm_a = j["perm"].value("a", c.perm_a);
            c.perm_c = j["perm"].value("c", c.perm_c);
        }
        c.unveil = j.value("unveil", c.unveil);
        c.trials = j.value("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        c.allow_zero_m1 = j.value("allow_zero_m1", c.allow_zero_m1);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    c.validate();
    return c;
}

nlohmann::json ScenarioConfig::to_json() const {
    nlohmann::json j{
        {"protocol", to_string(protocol)},
        {"n", n},
        {"unveil", unveil},
        {"trials", trials},
        {"seed", seed},
    };
    if (b.has_value()) {
        j["b"] = *b ? 1 : 0;
    }
    if (psi.has_value()) {
        j["psi"] = {{"alpha", amplitude_json(psi->first)}, {"beta", amplitude_json(psi->second)}};
    }
    if (is_novy()) {
        j["perm"] = {{"a", perm_a}, {"c", perm_c}};
    } else {
        j["allow_zero_m1"] = allow_zero_m1;
    }
    return j;
}

ProtocolRun run_protocol(const ScenarioConfig &config, CoinSource &coins, const RunOptions &options) {
    config.validate();
    return config.is_novy() ? run_novy(config, coins, options) : run_two_prover(config, coins, options);
}

}  // namespace qcommit
