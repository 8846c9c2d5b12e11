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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <iostream>

#include "qcommit/selftest.h"

int main() {
    auto results = qcommit::run_selftest(std::cout);
    double seconds = 0;
    int failures = 0;
    for (const auto &r : results) {
        seconds += r.seconds;
        failures += r.passed ? 0 : 1;
    }
    bool in_budget = seconds < qcommit::kSelftestBudgetSeconds;
    std::printf("[%s] full suite within %.0fs budget (%.3fs)\n", in_budget ? "PASS" : "FAIL",
                qcommit::kSelftestBudgetSeconds, seconds);
    std::printf("%d of %zu criteria failed\n", failures, results.size());
    return failures == 0 && in_budget ? 0 : 1;
}
