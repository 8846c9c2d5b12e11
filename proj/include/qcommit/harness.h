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

#ifndef QCOMMIT_HARNESS_H
#define QCOMMIT_HARNESS_H

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcommit/protocol.h"
#include "qcommit/qsim.h"

namespace qcommit {

/// Aggregate of many independent seeded executions of one scenario.
struct TrialReport {
    ScenarioConfig config;
    uint64_t trials = 0;
    uint64_t unveiled = 0;
    uint64_t accepted = 0;
    /// accepted / unveiled; unset when nothing was unveiled.
    std::optional<double> acceptance_rate;
    /// Occurrences of unveiled b = 0 and b = 1.
    std::array<uint64_t, 2> b_counts{};
    std::optional<double> min_fidelity;
    std::optional<double> mean_fidelity;
    /// Transcript of trial 0.
    Transcript transcript_sample;
    /// Named total variation distances between observed and expected distributions.
    std::map<std::string, double> tv_distances;
    /// Invariants that failed, empty when all held.
    std::vector<std::string> violations;
    double wall_clock_seconds = 0;

    bool invariants_ok() const {
        return violations.empty();
    }
};

/// Trial k is driven by SeededCoins::for_trial(seed, k), so results do not
/// depend on the thread count. run_trials runs trials under OpenMP;
/// run_trials_serial is the single-threaded reference.
TrialReport run_trials(const ScenarioConfig &config, uint64_t trials, uint64_t seed);
TrialReport run_trials_serial(const ScenarioConfig &config, uint64_t trials, uint64_t seed);

/// Probability of each outcome key.
using ProbabilityTable = std::map<std::string, double>;

/// CoinSource that follows a fixed list of choice indices and records every
/// choice point it meets, with its normalized weights. Past the end of the
/// script it takes the first option of positive weight.
class ScriptedCoins final : public CoinSource {
   public:
    struct ChoicePoint {
        std::vector<double> probabilities;
        size_t chosen;
    };

    explicit ScriptedCoins(std::vector<size_t> script) : script_(std::move(script)) {
    }

    size_t weighted(std::span<const double> weights) override;
    uint64_t uniform(uint64_t count) override;
    uint64_t uniform_where(uint64_t count, const std::function<bool(uint64_t)> &accept) override;

    const std::vector<ChoicePoint> &points() const {
        return points_;
    }
    /// Product of the probabilities of the choices taken.
    double path_probability() const;

   private:
    size_t choose(std::vector<double> probabilities);

    std::vector<size_t> script_;
    std::vector<ChoicePoint> points_;
};

/// Runs `execution` once per branch of its choice tree (depth first) and sums
/// the path probability of each returned key. Zero-probability branches are
/// skipped.
ProbabilityTable explore(const std::function<std::string(CoinSource &)> &execution);

/// Largest n accepted by exact_transcript_distribution.
inline constexpr size_t kMaxEnumerationNovy = 3;
inline constexpr size_t kMaxEnumerationTwoProver = 3;

/// Thrown when a scenario is too large to enumerate.
class EnumerationBoundError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Key of a run: Bob's view of the transcript, plus his verdict when an
/// unveiling happened.
std::string outcome_key(const ProtocolRun &run);

/// Exact distribution of outcome_key over all party coins and measurement
/// outcomes.
ProbabilityTable exact_transcript_distribution(const ScenarioConfig &config, const RunOptions &options = {});

/// (1 - q) * exact(b = 0) + q * exact(b = 1) for an honest config.
ProbabilityTable honest_bernoulli_mixture(const ScenarioConfig &honest_config, double q);

/// Half the L1 distance over the union of supports.
double total_variation(const ProbabilityTable &p, const ProbabilityTable &q);
double total_variation(const Distribution &p, const Distribution &q);

enum class ReportFormat { kJson, kText };
/// Accepts "json" or "text"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

nlohmann::json report_to_json(const TrialReport &report, bool include_timing = false);
/// Serializes deterministically; wall-clock time only when include_timing.
std::string emit_report(const TrialReport &report, ReportFormat format, bool include_timing = false);

nlohmann::json table_to_json(const ProbabilityTable &table);

}  // namespace qcommit

#endif
