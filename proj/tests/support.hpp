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

// Shared helpers for the unit tests.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eagertest/java/code_model.hpp"
#include "eagertest/java/test_cases.hpp"

namespace eagertest::testing {

inline std::string fixture_dir() { return EAGERTEST_FIXTURE_DIR; }

inline const java::CodeModel& golden_model() {
  static const java::CodeModel model = java::parse_sources({
      {fixture_dir() + "/golden/prod", java::SourceTag::Production},
      {fixture_dir() + "/golden/test", java::SourceTag::Test},
  });
  return model;
}

inline java::TestCase test_named(const java::CodeModel& model, std::string_view method) {
  for (auto& t : java::extract_test_cases(model)) {
    if (t.method->name == method) return t;
  }
  throw std::runtime_error("no test named " + std::string(method));
}

// The `nth` flattened call site named `callee` in the test body.
inline const java::CallExpr& call_named(const java::TestCase& test, std::string_view callee, int nth = 0) {
  std::vector<const java::Stmt*> flat;
  java::flatten(*test.method->body, flat);
  for (const java::Stmt* s : flat) {
    for (const auto& c : s->calls) {
      if (c.callee_name == callee && nth-- == 0) return c;
    }
  }
  throw std::runtime_error("no call named " + std::string(callee));
}

// Production sources first, then test sources.
inline java::CodeModel model_of(const std::vector<std::string>& production, const std::vector<std::string>& tests = {}) {
  std::vector<java::InMemorySource> sources;
  for (std::size_t i = 0; i < production.size(); ++i) {
    sources.push_back({"prod" + std::to_string(i) + ".java", production[i], java::SourceTag::Production});
  }
  for (std::size_t i = 0; i < tests.size(); ++i) {
    sources.push_back({"test" + std::to_string(i) + ".java", tests[i], java::SourceTag::Test});
  }
  return java::parse_strings(sources);
}

}  // namespace eagertest::testing
