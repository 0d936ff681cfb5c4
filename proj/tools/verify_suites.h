// Copyright 2026 The qfd Authors
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

#ifndef QFD_TOOLS_VERIFY_SUITES_H
#define QFD_TOOLS_VERIFY_SUITES_H

#include <cstdint>
#include <string>
#include <vector>

namespace qfd::cli {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::vector<int> sizes = {1, 2, 3, 4, 5, 6, 7, 8};  // mode counts d for the oracle suites
  int instances = 100;
  bool inject_fault = false;  // perturbs the fast-path type I error to prove the harness can fail
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// Runs every suite. Results depend only on the options, never on timing.
std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opt);

/// One line per suite plus a summary line.
std::string format_verify_report(const std::vector<SuiteResult>& results);

}  // namespace qfd::cli

#endif  // QFD_TOOLS_VERIFY_SUITES_H
