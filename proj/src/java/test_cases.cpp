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

#include "eagertest/java/test_cases.hpp"

#include <algorithm>
#include <map>

namespace eagertest::java {

std::string_view to_string(Framework framework) {
  switch (framework) {
    case Framework::JUnit3:
      return "junit3";
    case Framework::JUnit4:
      return "junit4";
    case Framework::JUnit5:
      return "junit5";
  }
  return "junit4";
}

namespace {

bool extends_junit3_test_case(const TypeDecl& type, const CodeModel& model) {
  auto mentions = [](const TypeDecl& t) {
    return std::any_of(t.supertypes.begin(), t.supertypes.end(),
                       [](const std::string& s) { return simple_name_of(s) == "TestCase"; });
  };
  if (mentions(type)) return true;
  auto supers = model.supertypes_of(type);
  return std::any_of(supers.begin(), supers.end(), [&](const TypeDecl* s) { return mentions(*s); });
}

bool uses_jupiter(const TypeDecl& type) {
  auto jupiter = [](const std::string& imp) { return imp.starts_with("org.junit.jupiter"); };
  return std::any_of(type.imports.begin(), type.imports.end(), jupiter) ||
         std::any_of(type.static_imports.begin(), type.static_imports.end(), jupiter);
}

std::string strip_test_affixes(std::string name) {
  for (std::string_view suffix : {"_ESTest", "TestCase", "Tests", "Test"}) {
    if (name.size() > suffix.size() && name.ends_with(suffix)) return name.substr(0, name.size() - suffix.size());
  }
  if (name.size() > 4 && name.starts_with("Test")) return name.substr(4);
  return name;
}

const TypeDecl* production_type(const CodeModel& model, const std::string& name, const TypeDecl& context) {
  const TypeDecl* t = model.resolve_type(name, &context);
  return t != nullptr && t->origin == SourceTag::Production ? t : nullptr;
}

}  // namespace

bool is_test_method(const TypeDecl& type, const MethodDecl& method, const CodeModel& model) {
  if (method.is_constructor || !method.body) return false;
  if (method.has_annotation("Test")) return true;
  return method.name.starts_with("test") && method.visibility == Visibility::Public && !method.is_static &&
         method.return_type == "void" && method.params.empty() && extends_junit3_test_case(type, model);
}

CutInference infer_cut(const TypeDecl& test_class, const CodeModel& model) {
  const std::string stem = strip_test_affixes(test_class.simple_name);
  std::vector<const TypeDecl*> named;
  for (const auto& t : model.types()) {
    if (t.origin == SourceTag::Production && t.simple_name == stem) named.push_back(&t);
  }
  if (named.size() > 1) {
    std::erase_if(named, [&](const TypeDecl* t) { return t->package_name != test_class.package_name; });
  }
  if (named.size() == 1) return {named.front()->qualified_name, "name"};

  std::map<std::string, int> uses;
  for (const auto& m : test_class.methods) {
    if (!m.body) continue;
    walk_exprs(*m.body, [&](const Expr& e) {
      if (e.kind == ExprKind::New) {
        if (const TypeDecl* t = production_type(model, erase_generics(e.type), test_class)) ++uses[t->qualified_name];
      } else if (e.kind == ExprKind::Call && e.target() != nullptr && e.target()->kind == ExprKind::Name &&
                 test_class.find_field(e.target()->text) == nullptr) {
        if (const TypeDecl* t = production_type(model, e.target()->text, test_class)) ++uses[t->qualified_name];
      }
    });
  }
  int best = 0;
  std::vector<std::string> leaders;
  for (const auto& [name, count] : uses) {
    if (count > best) {
      best = count;
      leaders = {name};
    } else if (count == best) {
      leaders.push_back(name);
    }
  }
  if (leaders.size() == 1) return {leaders.front(), "usage"};
  return {std::nullopt, leaders.empty() ? "no production type referenced" : "ambiguous usage"};
}

std::vector<TestCase> extract_test_cases(const CodeModel& model) {
  std::vector<TestCase> out;
  for (const auto& type : model.types()) {
    if (!type.is_test_class) continue;
    const CutInference cut = infer_cut(type, model);
    const bool jupiter = uses_jupiter(type);
    for (const auto& m : type.methods) {
      if (!is_test_method(type, m, model)) continue;
      TestCase tc;
      tc.owner = &type;
      tc.method = &m;
      tc.cut = cut.cut;
      tc.cut_basis = cut.basis;
      tc.framework = jupiter ? Framework::JUnit5 : m.has_annotation("Test") ? Framework::JUnit4 : Framework::JUnit3;
      out.push_back(tc);
    }
  }
  return out;
}

}  // namespace eagertest::java
