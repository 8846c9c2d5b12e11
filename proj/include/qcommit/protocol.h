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

#ifndef QCOMMIT_PROTOCOL_H
#define QCOMMIT_PROTOCOL_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "qcommit/coins.h"
#include "qcommit/engine.h"
#include "qcommit/kernels.h"
#include "qcommit/twoprover.h"

namespace qcommit {

enum class Protocol { kNovyHonest, kNovyAttack, kTwoProverHonest, kTwoProverAttack };

std::string_view to_string(Protocol protocol);
/// Accepts "novy-honest", "novy-attack", "2p-honest", "2p-attack".
Protocol parse_protocol(std::string_view name);

/// Invalid scenario configuration.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    Protocol protocol = Protocol::kNovyHonest;
    size_t n = 3;
    /// Honest protocols only.
    std::optional<bool> b;
    /// Attack protocols only: (alpha, beta).
    std::optional<std::pair<Amplitude, Amplitude>> psi;
    uint64_t perm_a = 5;
    uint64_t perm_c = 3;
    bool unveil = true;
    uint64_t trials = 1;
    uint64_t seed = 0;
    bool allow_zero_m1 = false;

    bool is_attack() const;
    bool is_novy() const;

    /// Throws ConfigError describing the first problem found.
    void validate() const;

    /// Parses and validates. Unknown keys are rejected.
    static ScenarioConfig from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
};

/// Knobs used by the verification harness; defaults match the plain protocols.
struct RunOptions {
    bool measure_controls_early = false;
    twoprover::MeasureOrder measure_order = twoprover::MeasureOrder::kAliceFirst;
};

struct ProtocolOutcome {
    bool unveiled = false;
    /// Bob's verdict; set when an unveiling took place.
    std::optional<bool> accepted;
    std::optional<bool> unveiled_bit;
    /// Fidelity of the recovered qubit with psi; attack runs without unveiling.
    std::optional<double> fidelity;
};

struct ProtocolRun {
    Transcript transcript;
    ProtocolOutcome outcome;
};

/// Executes the configured protocol's phases in order. Bob's verdict is
/// computed from the transcript alone.
ProtocolRun run_protocol(const ScenarioConfig &config, CoinSource &coins, const RunOptions &options = {});

}  // namespace qcommit

#endif
