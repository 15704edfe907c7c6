// Copyright 2026 The Gasket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gasket::verify {

enum class Suite { metric, functor, counterexamples, all };

/// "metric", "functor", "counterexamples", "all".
std::optional<Suite> parse_suite(std::string_view name);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

/// Criteria ids run by a suite, ascending.
std::vector<int> criteria_of(Suite suite);

/// Throws std::out_of_range for an unknown id. Deterministic: every
/// sampled criterion draws from a fixed seed.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance(Suite suite = Suite::all);

/// "PASS  criterion 3: title (detail)"
std::string format_result(const CriterionResult& result);

}  // namespace gasket::verify
