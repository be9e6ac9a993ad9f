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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "eagertest/java/code_model.hpp"
#include "eagertest/java/parser.hpp"
#include "eagertest/java/test_cases.hpp"

namespace eagertest::java {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kDirEntry = R"(
package org.example;

public class DirEntry {
  private String name;
  private long size;

  public void setSize(long s) { this.size = s; }
  public long getSize() { return size; }
  @Override
  public boolean equals(Object o) { return this.size == ((DirEntry) o).size; }
}
)";

constexpr std::string_view kDirEntryTest = R"(
package org.example;

import org.junit.Test;
import static org.junit.Assert.*;

public class DirEntry_ESTest {
  @Test(timeout = 4000)
  public void test2()  throws Throwable  {
      DirEntry dirEntry0 = new DirEntry();
      dirEntry0.setSize((-1053L));
      DirEntry dirEntry1 = new DirEntry();
      boolean boolean0 = dirEntry0.equals((Object) dirEntry1);
      assertEquals((-1053L), dirEntry0.getSize());
      assertEquals(false, boolean0);
  }
}
)";

const MethodDecl& method_named(const TypeDecl& t, std::string_view name) {
  for (const auto& m : t.methods) {
    if (m.name == name) return m;
  }
  throw std::runtime_error("no method " + std::string(name));
}

TEST(LexerTest, EmitsClosingAnglesSeparately) {
  auto toks = tokenize("Map<String, List<Integer>> m; x >>= 2;");
  int closers = 0;
  for (const auto& t : toks) closers += t.text == ">";
  EXPECT_EQ(closers, 3);
}

TEST(LexerTest, RecognizesLiterals) {
  auto toks = tokenize(R"(0x1F 1_000L 3.5f 1e9 'c' "s\"t" """
block""")");
  ASSERT_EQ(toks.size(), 8u);
  EXPECT_EQ(toks[0].kind, TokenKind::IntLiteral);
  EXPECT_EQ(toks[1].kind, TokenKind::IntLiteral);
  EXPECT_EQ(toks[2].kind, TokenKind::FloatLiteral);
  EXPECT_EQ(toks[3].kind, TokenKind::FloatLiteral);
  EXPECT_EQ(toks[4].kind, TokenKind::CharLiteral);
  EXPECT_EQ(toks[5].kind, TokenKind::StringLiteral);
  EXPECT_EQ(toks[6].kind, TokenKind::StringLiteral);
  EXPECT_EQ(toks[7].kind, TokenKind::End);
}

TEST(LexerTest, UnterminatedCommentThrows) { EXPECT_THROW(tokenize("/* open"), ParseError); }

TEST(ParserTest, ParsesDirEntryMembers) {
  auto unit = parse_compilation_unit(kDirEntry, "DirEntry.java");
  ASSERT_EQ(unit.types.size(), 1u);
  const TypeDecl& t = unit.types[0];
  EXPECT_EQ(t.qualified_name, "org.example.DirEntry");
  ASSERT_EQ(t.fields.size(), 2u);
  EXPECT_EQ(t.fields[1].name, "size");
  EXPECT_EQ(t.fields[1].type, "long");
  ASSERT_EQ(t.methods.size(), 3u);
  EXPECT_EQ(method_named(t, "getSize").return_type, "long");
  EXPECT_EQ(method_named(t, "equals").params.at(0).type, "Object");
  EXPECT_TRUE(method_named(t, "equals").has_annotation("Override"));
}

TEST(ParserTest, ClassifiesStatementsOfTest2) {
  auto unit = parse_compilation_unit(kDirEntryTest, "DirEntry_ESTest.java");
  const MethodDecl& m = method_named(unit.types.at(0), "test2");
  ASSERT_TRUE(m.body.has_value());
  const auto& body = *m.body;
  ASSERT_EQ(body.size(), 6u);
  EXPECT_EQ(body[0].kind, StmtKind::LocalDecl);
  EXPECT_EQ(body[0].assigned_var, "dirEntry0");
  EXPECT_EQ(body[0].declared_type, "DirEntry");
  ASSERT_EQ(body[0].calls.size(), 1u);
  EXPECT_TRUE(body[0].calls[0].is_constructor);
  EXPECT_EQ(body[0].calls[0].bound_to, "dirEntry0");
  EXPECT_EQ(body[1].kind, StmtKind::Expression);
  EXPECT_EQ(body[1].calls[0].callee_name, "setSize");
  EXPECT_EQ(body[1].calls[0].receiver, "dirEntry0");
  EXPECT_FALSE(body[1].calls[0].bound_to.has_value());
  EXPECT_EQ(body[3].calls[0].bound_to, "boolean0");
  EXPECT_EQ(body[4].kind, StmtKind::AssertCall);
  // Post-order: the nested getter precedes the assertion itself.
  ASSERT_EQ(body[4].calls.size(), 2u);
  EXPECT_EQ(body[4].calls[0].callee_name, "getSize");
  EXPECT_EQ(body[4].calls[1].callee_name, "assertEquals");
  EXPECT_EQ(body[5].kind, StmtKind::AssertCall);
  EXPECT_EQ(m.annotations.at(0).arguments, "timeout = 4000");
}

TEST(ParserTest, StatementSpansAreNonDecreasing) {
  auto unit = parse_compilation_unit(kDirEntryTest, "DirEntry_ESTest.java");
  std::vector<const Stmt*> flat;
  flatten(*method_named(unit.types.at(0), "test2").body, flat);
  for (std::size_t i = 1; i < flat.size(); ++i) EXPECT_LE(flat[i - 1]->span.begin, flat[i]->span.begin);
}

TEST(ParserTest, AssertionsAlwaysHaveArguments) {
  auto unit = parse_compilation_unit(kDirEntryTest, "DirEntry_ESTest.java");
  for (const auto& s : *method_named(unit.types.at(0), "test2").body) {
    if (s.kind == StmtKind::AssertCall) EXPECT_FALSE(s.exprs.front().args().empty());
  }
}

TEST(ParserTest, RecognizesQualifiedAssertions) {
  auto unit = parse_compilation_unit(R"(class T { void t() {
      Assert.assertTrue(x);
      Assertions.assertEquals(1, y);
      Other.assertTrue(z);
      assertThat(a, is(b));
  } })",
                                     "T.java");
  const auto& body = *unit.types[0].methods[0].body;
  EXPECT_EQ(body[0].kind, StmtKind::AssertCall);
  EXPECT_EQ(body[1].kind, StmtKind::AssertCall);
  EXPECT_EQ(body[2].kind, StmtKind::Expression);
  EXPECT_EQ(body[3].kind, StmtKind::AssertCall);
}

TEST(ParserTest, AssertionListIsConfigurable) {
  ParseOptions options;
  options.assertion_apis = {"verify"};
  auto unit = parse_compilation_unit("class T { void t() { verify(a); assertTrue(b); } }", "T.java", options);
  const auto& body = *unit.types[0].methods[0].body;
  EXPECT_EQ(body[0].kind, StmtKind::AssertCall);
  EXPECT_EQ(body[1].kind, StmtKind::Expression);
}

TEST(ParserTest, HandlesGenericsCastsAndShifts) {
  auto unit = parse_compilation_unit(R"(
import java.util.*;
class G<T extends Comparable<T>> implements Iterable<List<T>> {
  private Map<String, List<Integer>> m = new HashMap<>();
  int f(int a) {
    int b = a >> 2;
    int c = a >>> 3;
    b >>= 1;
    List<Object> l = (List<Object>) (Object) m.get("k");
    boolean lt = a < b && c > a;
    return (int) l.size() + b + c;
  }
})",
                                     "G.java");
  const TypeDecl& g = unit.types[0];
  EXPECT_EQ(g.supertypes, std::vector<std::string>{"Iterable"});
  ASSERT_TRUE(g.fields[0].initializer.has_value());
  EXPECT_EQ(g.fields[0].initializer->kind, ExprKind::New);
  const auto& body = *g.methods[0].body;
  ASSERT_EQ(body.size(), 6u);
  EXPECT_EQ(body[0].exprs[0].text, ">>");
  EXPECT_EQ(body[1].exprs[0].text, ">>>");
  EXPECT_EQ(body[2].exprs[0].text, ">>=");
  EXPECT_EQ(body[3].exprs[0].kind, ExprKind::Cast);
  EXPECT_EQ(body[3].calls.at(0).bound_to, "l");
  EXPECT_EQ(body[5].kind, StmtKind::Return);
}

TEST(ParserTest, FlattensControlStatementChildren) {
  auto unit = parse_compilation_unit(R"(class C { void f(java.util.List<String> xs) {
    for (String x : xs) { use(x); }
    try (Res r = open()) { r.go(); } catch (IOException | RuntimeException e) { log(e); } finally { done(); }
    if (xs.isEmpty()) a(); else { b(); }
    switch (n) { case 1: one(); break; default: other(); }
    Runnable run = () -> { inner(); };
  } })",
                                     "C.java");
  const auto& body = *unit.types[0].methods[0].body;
  ASSERT_EQ(body.size(), 5u);
  EXPECT_EQ(body[0].keyword, "for");
  EXPECT_EQ(body[0].children.at(0).assigned_var, "x");
  EXPECT_EQ(body[1].keyword, "try");
  bool saw_catch = false;
  for (const auto& c : body[1].children) saw_catch |= c.keyword == "catch" && c.assigned_var == "e";
  EXPECT_TRUE(saw_catch);
  EXPECT_EQ(body[2].keyword, "if");
  EXPECT_EQ(body[2].calls.at(0).callee_name, "isEmpty");
  // Calls inside lambdas belong to the lambda body.
  ASSERT_EQ(body[4].calls.size(), 0u);
  EXPECT_EQ(body[4].exprs.at(0).kind, ExprKind::Lambda);
}

TEST(ParserTest, NestedEnumAndRecordTypes) {
  auto unit = parse_compilation_unit(R"(package p;
public class Outer {
  enum Color { RED, GREEN; int code() { return 1; } }
  record Point(int x, int y) {}
  interface Shape { double area(); }
  @interface Marker { String value() default ""; }
})",
                                     "Outer.java");
  ASSERT_EQ(unit.types.size(), 5u);
  EXPECT_EQ(unit.types[1].qualified_name, "p.Outer.Color");
  EXPECT_EQ(unit.types[1].enclosing, "p.Outer");
  EXPECT_EQ(unit.types[1].fields.size(), 2u);
  EXPECT_EQ(unit.types[2].fields.size(), 2u);
  EXPECT_FALSE(unit.types[3].methods[0].body.has_value());
}

TEST(ParserTest, RejectsUnbalancedBraces) {
  EXPECT_THROW(parse_compilation_unit("class Broken { void f() { if (x) { }", "B.java"), ParseError);
}

TEST(ParserTest, RoundTripIsStable) {
  auto a = parse_compilation_unit(kDirEntryTest, "X.java");
  auto b = parse_compilation_unit(kDirEntryTest, "X.java");
  ASSERT_EQ(a.types.size(), b.types.size());
  EXPECT_EQ(a.types, b.types);
}

class SourceTreeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("eagertest_parser_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(root_);
    fs::create_directories(root_ / "prod/org/example");
    fs::create_directories(root_ / "test/org/example");
  }
  void TearDown() override { fs::remove_all(root_); }

  void write(const fs::path& rel, std::string_view text) {
    std::ofstream(root_ / rel) << text;
  }

  fs::path root_;
};

TEST_F(SourceTreeTest, ParsesProductionAndTestRoots) {
  write("prod/org/example/DirEntry.java", kDirEntry);
  write("test/org/example/DirEntry_ESTest.java", kDirEntryTest);
  CodeModel model = parse_sources({{(root_ / "prod").string(), SourceTag::Production},
                                   {(root_ / "test").string(), SourceTag::Test}});
  EXPECT_TRUE(model.diagnostics().empty());
  const TypeDecl* dir = model.find("org.example.DirEntry");
  ASSERT_NE(dir, nullptr);
  EXPECT_EQ(dir->origin, SourceTag::Production);
  EXPECT_FALSE(dir->is_test_class);
  for (std::string_view name : {"setSize", "getSize", "equals"}) EXPECT_NO_THROW(method_named(*dir, name));
  const TypeDecl* test = model.find("org.example.DirEntry_ESTest");
  ASSERT_NE(test, nullptr);
  EXPECT_TRUE(test->is_test_class);
  EXPECT_NO_THROW(method_named(*test, "test2"));
}

TEST_F(SourceTreeTest, EmptyDirectoryGivesEmptyModel) {
  CodeModel model = parse_sources({{(root_ / "prod").string(), SourceTag::Production}});
  EXPECT_TRUE(model.types().empty());
  EXPECT_TRUE(model.diagnostics().empty());
}

TEST_F(SourceTreeTest, MalformedFileBecomesOneDiagnostic) {
  write("prod/org/example/DirEntry.java", kDirEntry);
  write("prod/org/example/Broken.java", "package org.example; class Broken { void f() {");
  CodeModel model = parse_sources({{(root_ / "prod").string(), SourceTag::Production}});
  EXPECT_EQ(model.types().size(), 1u);
  ASSERT_EQ(model.diagnostics().size(), 1u);
  EXPECT_NE(model.diagnostics()[0].file.find("Broken.java"), std::string::npos);
}

TEST_F(SourceTreeTest, MissingRootIsAHardError) {
  EXPECT_THROW(parse_sources({{(root_ / "absent").string(), SourceTag::Production}}), SourceError);
}

TEST_F(SourceTreeTest, ParsingTwiceGivesEqualModels) {
  write("prod/org/example/DirEntry.java", kDirEntry);
  write("test/org/example/DirEntry_ESTest.java", kDirEntryTest);
  std::vector<SourceRoot> roots = {{(root_ / "prod").string(), SourceTag::Production},
                                   {(root_ / "test").string(), SourceTag::Test}};
  EXPECT_EQ(parse_sources(roots), parse_sources(roots));
}

TEST(CodeModelTest, ResolvesTypesThroughImportsAndNesting) {
  CodeModel model = parse_strings({
      {"a/Base.java", "package a; public class Base { public static class Inner {} }", SourceTag::Production},
      {"b/Sub.java", "package b; import a.Base; public class Sub extends Base { Inner i; }", SourceTag::Production},
      {"c/Other.java", "package c; import a.*; class Other extends Base.Inner {}", SourceTag::Production},
  });
  const TypeDecl* sub = model.find("b.Sub");
  ASSERT_NE(sub, nullptr);
  EXPECT_EQ(sub->supertypes, std::vector<std::string>{"a.Base"});
  EXPECT_EQ(model.resolve_type("Base", sub)->qualified_name, "a.Base");
  EXPECT_EQ(model.find("c.Other")->supertypes, std::vector<std::string>{"a.Base.Inner"});
  EXPECT_TRUE(model.is_subtype_of(*sub, "a.Base"));
  EXPECT_EQ(model.resolve_type("Missing", sub), nullptr);
}

TEST(CodeModelTest, DuplicateQualifiedNamesKeepTheFirst) {
  CodeModel model = parse_strings({{"one/A.java", "package p; class A { int x; }", SourceTag::Production},
                                   {"two/A.java", "package p; class A { int y; }", SourceTag::Production}});
  ASSERT_EQ(model.types().size(), 1u);
  EXPECT_EQ(model.types()[0].fields[0].name, "x");
  EXPECT_EQ(model.diagnostics().size(), 1u);
}

}  // namespace
}  // namespace eagertest::java
