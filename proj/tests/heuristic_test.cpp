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

#include "eagertest/heuristic.hpp"

#include <gtest/gtest.h>

#include "golden_table.hpp"
#include "support.hpp"

namespace eagertest {
namespace {

using testing::golden_model;
using testing::model_of;
using testing::test_named;

Verdict heuristic_for(const java::CodeModel& model, std::string_view test) {
  StereotypeCache cache(model, kDefaultEffectDepth);
  return run_heuristic(test_named(model, test), model, {}, cache);
}

TEST(HeuristicTest, GoldenVerdicts) {
  for (const auto& row : testing::golden_table()) {
    auto v = heuristic_for(golden_model(), row.method);
    EXPECT_EQ(to_string(v.result), row.expected.at("heuristic")) << row.method;
    EXPECT_TRUE(v.flags.empty()) << row.method;
  }
}

TEST(HeuristicTest, WorkedExampleEvidence) {
  auto v = heuristic_for(golden_model(), "test2");
  EXPECT_EQ(v.evidence["containment_count"], 0);
  EXPECT_EQ(v.evidence["meth_outcomes"].size(), 5u);
  EXPECT_EQ(v.evidence["verified_info"], nlohmann::json::array({"dirEntry0.size@v1", "boolean0"}));
  EXPECT_EQ(v.evidence["cut"], "org.jftp.fs.DirEntry");
  EXPECT_TRUE(v.evidence.contains("trace"));
}

TEST(HeuristicTest, SingleCoveringCall) {
  auto v = heuristic_for(golden_model(), "testGetConnectionUserPassSetters");
  EXPECT_EQ(v.evidence["containment_count"], 1);
  ASSERT_EQ(v.evidence["covering_calls"].size(), 1u);
  const int covering = v.evidence["covering_calls"][0];
  bool found = false;
  for (const auto& m : v.evidence["meth_outcomes"]) {
    if (m["call"] == covering) {
      EXPECT_EQ(m["callee"], "getReadOnlyConnection");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(HeuristicTest, TestId) {
  auto v = heuristic_for(golden_model(), "test2");
  EXPECT_EQ(v.test.cls, "org.jftp.fs.DirEntry_ESTest");
  EXPECT_EQ(v.test.method, "test2");
  EXPECT_TRUE(v.test.file.ends_with("DirEntry_ESTest.java"));
  EXPECT_EQ(v.detector, "heuristic");
}

const char* kBox = R"(package p;
public class Box {
  private int a;
  private int b;
  public void setA(int v) { a = v; }
  public void setB(int v) { b = v; }
  public int getA() { return a; }
  public int getB() { return b; }
}
)";

java::CodeModel box_test(const std::string& body) {
  return model_of({kBox}, {"package p;\nimport org.junit.Test;\nimport static org.junit.Assert.*;\n"
                           "public class BoxTest {\n  @Test public void t() {\n" + body + "\n  }\n}\n"});
}

TEST(HeuristicTest, NoAssertions) {
  auto v = heuristic_for(box_test("Box x = new Box();\nx.setA(1);"), "t");
  EXPECT_EQ(v.result, VerdictResult::NotEager);
  EXPECT_TRUE(v.flags.count("no-assertions"));
}

TEST(HeuristicTest, LiteralAssertsOnly) {
  auto v = heuristic_for(box_test("assertTrue(true);"), "t");
  EXPECT_EQ(v.result, VerdictResult::NotEager);
  EXPECT_TRUE(v.flags.count("empty-verified-info"));
}

TEST(HeuristicTest, AddingForeignAssertFlipsToEager) {
  const std::string base = "Box x = new Box();\nx.setA(1);\nx.setB(2);\nassertEquals(1, x.getA());";
  EXPECT_EQ(heuristic_for(box_test(base), "t").result, VerdictResult::NotEager);
  EXPECT_EQ(heuristic_for(box_test(base + "\nassertEquals(2, x.getB());"), "t").result, VerdictResult::Eager);
}

TEST(HeuristicTest, ReorderingIndependentCallsKeepsVerdict) {
  const std::string tail = "\nassertEquals(1, x.getA());\nassertEquals(2, x.getB());";
  auto ab = heuristic_for(box_test("Box x = new Box();\nx.setA(1);\nx.setB(2);" + tail), "t");
  auto ba = heuristic_for(box_test("Box x = new Box();\nx.setB(2);\nx.setA(1);" + tail), "t");
  EXPECT_EQ(ab.result, ba.result);
  const std::string one = "\nassertEquals(1, x.getA());";
  EXPECT_EQ(heuristic_for(box_test("Box x = new Box();\nx.setA(1);\nx.setB(2);" + one), "t").result,
            heuristic_for(box_test("Box x = new Box();\nx.setB(2);\nx.setA(1);" + one), "t").result);
}

TEST(HeuristicTest, UnresolvedCutIsNotApplicable) {
  auto model = model_of({"package p; public class A {}", "package p; public class B {}"},
                        {"package p;\nimport org.junit.Test;\npublic class Mixed {\n"
                         "  @Test public void t() { A a = new A(); B b = new B(); }\n}\n"});
  auto v = heuristic_for(model, "t");
  EXPECT_EQ(v.result, VerdictResult::NotApplicable);
  EXPECT_TRUE(v.flags.count("unresolved-cut"));
}

LinearizedTest synthetic(std::vector<FactSet> outcomes, FactSet verified) {
  LinearizedTest t;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    CallRecord c;
    c.index = static_cast<int>(i);
    c.outcome = outcomes[i];
    t.records.emplace_back(c);
  }
  AssertRecord a;
  a.index = static_cast<int>(outcomes.size());
  a.verified = verified;
  t.records.emplace_back(a);
  t.meth_outcomes = outcomes;
  t.verified_per_assert = {verified};
  t.verified_union = verified;
  return t;
}

TEST(HeuristicTest, CountMappingIsTotal) {
  const auto x = OutcomeFact::returned("x", "x");
  const auto y = OutcomeFact::returned("y", "y");
  auto zero = detect_eager(synthetic({{x}, {y}}, {x, y}));
  EXPECT_EQ(zero.result, VerdictResult::Eager);
  EXPECT_EQ(zero.evidence["containment_count"], 0);
  auto one = detect_eager(synthetic({{x, y}, {y}}, {x, y}));
  EXPECT_EQ(one.result, VerdictResult::NotEager);
  auto two = detect_eager(synthetic({{x, y}, {x, y}, {}}, {x}));
  EXPECT_EQ(two.result, VerdictResult::Eager);
  EXPECT_TRUE(two.flags.count("ambiguous-coverage"));
  EXPECT_EQ(two.evidence["containment_count"], 2);
}

TEST(HeuristicTest, EmptyOutcomesNeverCover) {
  const auto x = OutcomeFact::returned("x", "x");
  auto v = detect_eager(synthetic({{}, {}}, {x}));
  EXPECT_EQ(v.result, VerdictResult::Eager);
  EXPECT_EQ(v.evidence["containment_count"], 0);
}

TEST(VerdictTest, ResultNamesRoundTrip) {
  for (auto r : {VerdictResult::Eager, VerdictResult::NotEager, VerdictResult::NotApplicable}) {
    EXPECT_EQ(parse_verdict_result(to_string(r)), r);
  }
  EXPECT_FALSE(parse_verdict_result("maybe").has_value());
}

}  // namespace
}  // namespace eagertest
