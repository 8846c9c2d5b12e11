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


#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcommit/harness.h"
#include "qcommit/selftest.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitConfigError = 2;

qcommit::ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qcommit::ConfigError("cannot open config file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw qcommit::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return qcommit::ScenarioConfig::from_json(j);
}

int cmd_run(const std::string &path, std::optional<uint64_t> trials, std::optional<uint64_t> seed,
            const std::string &format_name, bool timing) {
    qcommit::ReportFormat format;
    try {
        format = qcommit::parse_report_format(format_name);
    } catch (const std::invalid_argument &e) {
        throw qcommit::ConfigError(e.what());
    }
    qcommit::ScenarioConfig config = load_config(path);
    if (trials) {
        config.trials = *trials;
    }
    if (seed) {
        config.seed = *seed;
    }
    config.validate();
    qcommit::TrialReport report = qcommit::run_trials(config, config.trials, config.seed);
    std::cout << qcommit::emit_report(report, format, timing);
    return report.invariants_ok() ? kExitPass : kExitInvariantFailure;
}

int cmd_enumerate(const std::string &path) {
    qcommit::ScenarioConfig config = load_config(path);
    qcommit::ProbabilityTable table = qcommit::exact_transcript_distribution(config);
    double total = 0;
    for (const auto &[key, p] : table) {
        total += p;
    }
    nlohmann::json out;
    out["config"] = config.to_json();
    out["outcomes"] = qcommit::table_to_json(table);
    out["total_probability"] = total;
    std::cout << out.dump(2) << "\n";
    return std::abs(total - 1) <= 1e-10 ? kExitPass : kExitInvariantFailure;
}

int cmd_selftest() {
    auto results = qcommit::run_selftest(std::cout);
    double seconds = 0;
    bool ok = true;
    for (const auto &r : results) {
        seconds += r.seconds;
        ok = ok && r.passed;
    }
    bool in_budget = seconds < qcommit::kSelftestBudgetSeconds;
    std::printf("%s total (%.3fs / %.0fs)\n", ok && in_budget ? "[PASS]" : "[FAIL]", seconds,
                qcommit::kSelftestBudgetSeconds);
    return ok && in_budget ? kExitPass : kExitInvariantFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact simulation of quantum attacks on bit commitment protocols"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<uint64_t> trials;
    std::optional<uint64_t> seed;
    std::string format = "json";
    bool timing = false;

    auto *run = app.add_subcommand("run", "Run seeded trials of a scenario and print a report");
    run->add_option("--config", config_path, "Scenario config JSON")->required();
    run->add_option("--trials", trials, "Number of trials (overrides the config)");
    run->add_option("--seed", seed, "Base seed (overrides the config)");
    run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    run->add_flag("--timing", timing, "Include wall-clock time in the report");

    auto *enumerate = app.add_subcommand("enumerate", "Print the exact outcome distribution of a small scenario");
    enumerate->add_option("--config", config_path, "Scenario config JSON")->required();

    app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config_path, trials, seed, format, timing);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(config_path);
        }
        return cmd_selftest();
    } catch (const qcommit::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const qcommit::EnumerationBoundError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariantFailure;
    }
}
