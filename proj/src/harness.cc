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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>

namespace qcommit {

namespace {

constexpr double kFidelityFloor = 1 - 1e-9;
constexpr uint64_t kMaxScriptedRange = uint64_t{1} << 16;

struct TrialResult {
    ProtocolOutcome outcome;
    std::string error;
};

TrialResult run_one(const ScenarioConfig &config, uint64_t seed, uint64_t trial, Transcript *keep_transcript) {
    TrialResult result;
    try {
        SeededCoins coins = SeededCoins::for_trial(seed, trial);
        ProtocolRun run = run_protocol(config, coins);
        result.outcome = run.outcome;
        if (keep_transcript != nullptr) {
            *keep_transcript = std::move(run.transcript);
        }
    } catch (const std::exception &e) {
        result.error = "trial " + std::to_string(trial) + ": " + e.what();
    }
    return result;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Probability of unveiling b = 1 implied by the config.
double expected_b1(const ScenarioConfig &config) {
    if (config.is_attack()) {
        return std::norm(config.psi->second);
    }
    return *config.b ? 1.0 : 0.0;
}

TrialReport aggregate(const ScenarioConfig &config, uint64_t seed, const std::vector<TrialResult> &results,
                      Transcript sample) {
    TrialReport report;
    report.config = config;
    report.config.trials = results.size();
    report.config.seed = seed;
    report.trials = results.size();
    report.transcript_sample = std::move(sample);

    double fidelity_sum = 0;
    uint64_t fidelity_count = 0;
    for (const auto &r : results) {
        if (!r.error.empty()) {
            report.violations.push_back(r.error);
            continue;
        }
        const auto &o = r.outcome;
        if (o.unveiled) {
            report.unveiled++;
            report.accepted += o.accepted.value_or(false) ? 1 : 0;
            report.b_counts[o.unveiled_bit.value_or(false) ? 1 : 0]++;
        }
        if (o.fidelity.has_value()) {
            fidelity_sum += *o.fidelity;
            fidelity_count++;
            report.min_fidelity = std::min(report.min_fidelity.value_or(1.0), *o.fidelity);
        }
    }
    if (fidelity_count > 0) {
        report.mean_fidelity = fidelity_sum / static_cast<double>(fidelity_count);
        if (*report.min_fidelity < kFidelityFloor) {
            report.violations.push_back("recovery fidelity " + fmt(*report.min_fidelity) + " below 1 - 1e-9");
        }
    }
    if (report.unveiled > 0) {
        double total = static_cast<double>(report.unveiled);
        report.acceptance_rate = static_cast<double>(report.accepted) / total;
        if (report.accepted != report.unveiled) {
            report.violations.push_back("acceptance rate " + fmt(*report.acceptance_rate) + " != 1");
        }

        double p1 = expected_b1(config);
        double observed1 = static_cast<double>(report.b_counts[1]) / total;
        report.tv_distances["unveiled_b_vs_expected"] = std::abs(observed1 - p1);
        double sigma = std::sqrt(total * p1 * (1 - p1));
        double deviation = std::abs(static_cast<double>(report.b_counts[1]) - total * p1);
        if (deviation > 3 * sigma + 1e-9) {
            report.violations.push_back("unveiled b = 1 count " + std::to_string(report.b_counts[1]) +
                                        " outside 3 sigma of " + fmt(total * p1));
        }
    }
    return report;
}

}  // namespace

TrialReport run_trials_serial(const ScenarioConfig &config, uint64_t trials, uint64_t seed) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(trials);
    Transcript sample;
    for (uint64_t k = 0; k < trials; k++) {
        results[k] = run_one(config, seed, k, k == 0 ? &sample : nullptr);
    }
    TrialReport report = aggregate(config, seed, results, std::move(sample));
    report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

TrialReport run_trials(const ScenarioConfig &config, uint64_t trials, uint64_t seed) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(trials);
    Transcript sample;
    const auto count = static_cast<int64_t>(trials);
    // run_one catches everything, so nothing escapes the parallel region.
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t k = 0; k < count; k++) {
        results[k] = run_one(config, seed, k, k == 0 ? &sample : nullptr);
    }
    TrialReport report = aggregate(config, seed, results, std::move(sample));
    report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

size_t ScriptedCoins::choose(std::vector<double> probabilities) {
    size_t k = points_.size();
    size_t chosen;
    if (k < script_.size()) {
        chosen = script_[k];
        if (chosen >= probabilities.size() || !(probabilities[chosen] > 0)) {
            throw std::logic_error("scripted choice is not a live branch");
        }
    } else {
        chosen = 0;
        while (chosen < probabilities.size() && !(probabilities[chosen] > 0)) {
            chosen++;
        }
        if (chosen == probabilities.size()) {
            throw std::invalid_argument("choice point has no positive-probability option");
        }
    }
    points_.push_back({std::move(probabilities), chosen});
    return chosen;
}

size_t ScriptedCoins::weighted(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) {
        if (w < 0) {
            throw std::invalid_argument("negative weight");
        }
        total += w;
    }
    if (!(total > 0)) {
        throw std::invalid_argument("weights must have a positive sum");
    }
    std::vector<double> p;
    p.reserve(weights.size());
    for (double w : weights) {
        p.push_back(w / total);
    }
    return choose(std::move(p));
}

uint64_t ScriptedCoins::uniform(uint64_t count) {
    if (count == 0 || count > kMaxScriptedRange) {
        throw std::invalid_argument("uniform range unsuitable for enumeration");
    }
    return choose(std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

uint64_t ScriptedCoins::uniform_where(uint64_t count, const std::function<bool(uint64_t)> &accept) {
    if (count == 0 || count > kMaxScriptedRange) {
        throw std::invalid_argument("uniform range unsuitable for enumeration");
    }
    std::vector<uint64_t> candidates;
    for (uint64_t v = 0; v < count; v++) {
        if (accept(v)) {
            candidates.push_back(v);
        }
    }
    if (candidates.empty()) {
        throw std::invalid_argument("no value satisfies the predicate");
    }
    size_t k = choose(std::vector<double>(candidates.size(), 1.0 / static_cast<double>(candidates.size())));
    return candidates[k];
}

double ScriptedCoins::path_probability() const {
    double p = 1;
    for (const auto &point : points_) {
        p *= point.probabilities[point.chosen];
    }
    return p;
}

ProbabilityTable explore(const std::function<std::string(CoinSource &)> &execution) {
    ProbabilityTable table;
    std::vector<size_t> script;
    while (true) {
        ScriptedCoins coins(script);
        std::string key = execution(coins);
        table[key] += coins.path_probability();

        // Advance the deepest choice point that still has an unexplored live option.
        const auto &points = coins.points();
        bool advanced = false;
        for (size_t k = points.size(); k-- > 0;) {
            const auto &pt = points[k];
            size_t next = pt.chosen + 1;
            while (next < pt.probabilities.size() && !(pt.probabilities[next] > 0)) {
                next++;
            }
            if (next < pt.probabilities.size()) {
                script.clear();
                for (size_t j = 0; j < k; j++) {
                    script.push_back(points[j].chosen);
                }
                script.push_back(next);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            return table;
        }
    }
}

std::string outcome_key(const ProtocolRun &run) {
    std::string key = run.transcript.view_of(PartyId::kBob).canonical();
    if (run.outcome.unveiled) {
        key += run.outcome.accepted.value_or(false) ? "|accepted=1" : "|accepted=0";
    }
    return key;
}

ProbabilityTable exact_transcript_distribution(const ScenarioConfig &config, const RunOptions &options) {
    config.validate();
    size_t bound = config.is_novy() ? kMaxEnumerationNovy : kMaxEnumerationTwoProver;
    if (config.n > bound) {
        throw EnumerationBoundError("exact enumeration supports n <= " + std::to_string(bound) + " for " +
                                    std::string(to_string(config.protocol)));
    }
    return explore([&](CoinSource &coins) {
        return outcome_key(run_protocol(config, coins, options));
    });
}

ProbabilityTable honest_bernoulli_mixture(const ScenarioConfig &honest_config, double q) {
    if (honest_config.is_attack()) {
        throw std::invalid_argument("mixture over b needs an honest config");
    }
    ProbabilityTable out;
    for (bool b : {false, true}) {
        double weight = b ? q : 1 - q;
        if (weight == 0) {
            continue;
        }
        ScenarioConfig c = honest_config;
        c.b = b;
        for (const auto &[key, p] : exact_transcript_distribution(c)) {
            out[key] += weight * p;
        }
    }
    return out;
}

double total_variation(const ProbabilityTable &p, const ProbabilityTable &q) {
    std::set<std::string> keys;
    for (const auto &[k, v] : p) {
        keys.insert(k);
    }
    for (const auto &[k, v] : q) {
        keys.insert(k);
    }
    double sum = 0;
    for (const auto &k : keys) {
        auto a = p.find(k);
        auto b = q.find(k);
        sum += std::abs((a == p.end() ? 0.0 : a->second) - (b == q.end() ? 0.0 : b->second));
    }
    return sum / 2;
}

double total_variation(const Distribution &p, const Distribution &q) {
    ProbabilityTable a;
    ProbabilityTable b;
    for (const auto &[k, v] : p) {
        a[std::to_string(k)] = v;
    }
    for (const auto &[k, v] : q) {
        b[std::to_string(k)] = v;
    }
    return total_variation(a, b);
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") {
        return ReportFormat::kJson;
    }
    if (name == "text") {
        return ReportFormat::kText;
    }
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

nlohmann::json report_to_json(const TrialReport &report, bool include_timing) {
    auto optional_number = [](const std::optional<double> &v) -> nlohmann::json {
        return v.has_value() ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::json j{
        {"config", report.config.to_json()},
        {"trials", report.trials},
        {"unveiled", report.unveiled},
        {"accepted", report.accepted},
        {"acceptance_rate", optional_number(report.acceptance_rate)},
        {"b_counts", report.b_counts},
        {"fidelity", nullptr},
        {"tv_distances", report.tv_distances},
        {"invariants_ok", report.invariants_ok()},
        {"violations", report.violations},
        {"transcript_sample", report.transcript_sample.to_json()},
    };
    if (report.min_fidelity.has_value()) {
        j["fidelity"] = {{"min", *report.min_fidelity}, {"mean", *report.mean_fidelity}};
    }
    if (include_timing) {
        j["wall_clock_seconds"] = report.wall_clock_seconds;
    }
    return j;
}

std::string emit_report(const TrialReport &report, ReportFormat format, bool include_timing) {
    if (format == ReportFormat::kJson) {
        return report_to_json(report, include_timing).dump(2) + "\n";
    }
    std::string out;
    auto line = [&](const std::string &key, const std::string &value) {
        out += key + ": " + value + "\n";
    };
    line("protocol", std::string(to_string(report.config.protocol)));
    line("n", std::to_string(report.config.n));
    line("seed", std::to_string(report.config.seed));
    line("trials", std::to_string(report.trials));
    line("unveiled", std::to_string(report.unveiled));
    line("acceptance_rate", report.acceptance_rate.has_value() ? fmt(*report.acceptance_rate) : "n/a");
    line("b_counts", std::to_string(report.b_counts[0]) + " " + std::to_string(report.b_counts[1]));
    if (report.min_fidelity.has_value()) {
        line("min_fidelity", fmt(*report.min_fidelity));
        line("mean_fidelity", fmt(*report.mean_fidelity));
    }
    for (const auto &[name, tv] : report.tv_distances) {
        line("tv." + name, fmt(tv));
    }
    line("invariants", report.invariants_ok() ? "ok" : "FAILED");
    for (const auto &v : report.violations) {
        line("violation", v);
    }
    if (include_timing) {
        line("wall_clock_seconds", fmt(report.wall_clock_seconds));
    }
    return out;
}

nlohmann::json table_to_json(const ProbabilityTable &table) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[key, p] : table) {
        j[key] = p;
    }
    return j;
}

}  // namespace qcommit
