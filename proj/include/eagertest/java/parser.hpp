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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eagertest/java/ast.hpp"

namespace eagertest::java {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class TokenKind { Identifier, IntLiteral, FloatLiteral, CharLiteral, StringLiteral, Operator, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
  std::size_t offset = 0;
};

// `>` is always emitted alone (never `>>` / `>>>`) so that nested generic
// argument lists close cleanly; the expression parser re-joins adjacent ones.
std::vector<Token> tokenize(std::string_view source);

struct ParseOptions {
  // Callee names recognized as assertions, unqualified or qualified by
  // Assert / Assertions.
  std::vector<std::string> assertion_apis = {
      "assertEquals", "assertTrue",   "assertFalse",       "assertNull",
      "assertNotNull", "assertSame",  "assertNotSame",     "assertArrayEquals",
      "assertThat",   "fail",         "assertThrows",
  };
};

struct CompilationUnit {
  std::string package_name;
  std::vector<std::string> imports;
  std::vector<std::string> static_imports;
  // Top-level and nested types, outer types first.
  std::vector<TypeDecl> types;
};

// Parses one Java compilation unit. Throws ParseError on malformed input.
CompilationUnit parse_compilation_unit(std::string_view source, const std::string& file,
                                       const ParseOptions& options = {});

// True if `call` is an assertion per `options` (checks callee and qualifier).
bool is_assertion_call(const Expr& call, const ParseOptions& options);

}  // namespace eagertest::java
