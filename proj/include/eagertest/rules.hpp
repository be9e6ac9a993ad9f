// Copyright 2026 The eagertest Authors.
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

// Eager-test detection rules from the literature, evaluated on the same code
// model as the heuristic.

#pragma once

#include <array>

#include "eagertest/stereotypes.hpp"
#include "eagertest/verdict.hpp"

namespace eagertest {

enum class RuleId { DR1, DR2_1, DR2_2, DR2_3, DR3, DR4 };

inline constexpr std::array<RuleId, 6> kAllRules = {RuleId::DR1,   RuleId::DR2_1, RuleId::DR2_2,
                                                    RuleId::DR2_3, RuleId::DR3,   RuleId::DR4};

std::string_view to_string(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view text);

// Call-site counters shared by DR1 and DR2.x.
struct CallCounts {
  int cut_calls = 0;
  int production_calls = 0;
};
CallCounts count_calls(const java::TestCase& test, const java::CodeModel& model);

// Number of runs of non-assert statements that are immediately followed by
// assert statements.
int count_cycles(const std::vector<java::Stmt>& body);

// Accessor by name: get/is/has followed by an upper-case letter.
bool has_accessor_name(std::string_view name);

Verdict apply_rule(RuleId rule, const java::TestCase& test, const java::CodeModel& model, StereotypeCache& cache);

}  // namespace eagertest
