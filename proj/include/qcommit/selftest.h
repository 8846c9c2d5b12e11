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

#ifndef QCOMMIT_SELFTEST_H
#define QCOMMIT_SELFTEST_H

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qcommit {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
    double budget_seconds;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    /// Returns a detail line on success; throws std::runtime_error describing
    /// the failure otherwise.
    std::function<std::string()> check;
};

/// The acceptance criteria, in order.
const std::vector<Criterion> &acceptance_criteria();

/// Runs one criterion. A criterion fails if its check throws or runs over budget.
CriterionResult run_criterion(const Criterion &criterion);

/// Runs every criterion, printing one PASS/FAIL line each to `out`.
std::vector<CriterionResult> run_selftest(std::ostream &out);

/// Full selftest wall-clock budget.
inline constexpr double kSelftestBudgetSeconds = 90;

}  // namespace qcommit

#endif
