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

#include <optional>
#include <string>
#include <vector>

#include "eagertest/java/code_model.hpp"

namespace eagertest::java {

enum class Framework { JUnit3, JUnit4, JUnit5 };

std::string_view to_string(Framework framework);

// One test method. Pointers refer into the CodeModel it was extracted from.
struct TestCase {
  const TypeDecl* owner = nullptr;
  const MethodDecl* method = nullptr;
  // Qualified name of the class under test; empty when inference failed.
  std::optional<std::string> cut;
  // "name", "usage" or a short reason for an unresolved CUT.
  std::string cut_basis;
  Framework framework = Framework::JUnit4;

  const std::string& owning_class() const { return owner->qualified_name; }
  const std::string& file() const { return owner->file; }
};

// @Test (JUnit 4/5) or `public void test*()` in a junit.framework.TestCase
// subclass (JUnit 3).
bool is_test_method(const TypeDecl& type, const MethodDecl& method, const CodeModel& model);

// Naming convention first (Foo <- FooTest, TestFoo, FooTests, FooTestCase,
// Foo_ESTest), then the production type most often instantiated or
// statically invoked by the test class.
struct CutInference {
  std::optional<std::string> cut;
  std::string basis;
};
CutInference infer_cut(const TypeDecl& test_class, const CodeModel& model);

// All test cases in model order (file, then declaration order).
std::vector<TestCase> extract_test_cases(const CodeModel& model);

}  // namespace eagertest::java
