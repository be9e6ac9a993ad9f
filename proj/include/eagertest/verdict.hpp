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

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"

namespace eagertest {

enum class VerdictResult { Eager, NotEager, NotApplicable };

std::string_view to_string(VerdictResult r);
std::optional<VerdictResult> parse_verdict_result(std::string_view text);

struct TestId {
  std::string file;
  std::string cls;
  std::string method;
  auto operator<=>(const TestId&) const = default;
};

struct Verdict {
  TestId test;
  std::string detector;
  VerdictResult result = VerdictResult::NotApplicable;
  std::set<std::string> flags;
  nlohmann::json evidence = nlohmann::json::object();
};

}  // namespace eagertest
