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

// Simplified Java syntax tree shared by every analysis. The tree keeps just
// enough structure for name/arity resolution and field effect tracking; it is
// not a full compiler front end.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eagertest::java {

enum class ExprKind {
  Literal,
  Name,
  FieldAccess,
  Call,
  New,
  NewArray,
  ArrayInit,
  Assign,
  Binary,
  Unary,
  Postfix,
  Cast,
  Conditional,
  ArrayAccess,
  ClassLiteral,
  This,
  Super,
  Lambda,
  MethodRef,
  InstanceOf,
  Switch,
};

struct Stmt;

// One expression node. The meaning of `text`, `type` and `operands` depends
// on `kind`:
//   Literal       text = source text, type = literal type ("String", "long", "null", ...)
//   Name          text = identifier
//   FieldAccess   text = member name, operands = {target}
//   Call          text = callee name, operands = {[target], args...}
//   New           type = erased class name, operands = args
//   Assign        text = operator, operands = {lhs, rhs}
//   Binary        text = operator, operands = {lhs, rhs}
//   Unary/Postfix text = operator, operands = {operand}
//   Cast          type = target type, operands = {operand}
//   Conditional   operands = {condition, then, else}
//   Lambda        params, body
// Explicit constructor invocations `this(...)` / `super(...)` are Calls whose
// callee name is "this" or "super".
struct Expr {
  ExprKind kind = ExprKind::Literal;
  std::string text;
  std::string type;
  bool has_target = false;
  std::vector<Expr> operands;
  std::vector<std::string> params;
  std::vector<Stmt> body;
  // Unique per method body for Call and New nodes, -1 otherwise.
  int call_id = -1;
  int line = 0;

  bool operator==(const Expr&) const;

  bool is_call_like() const { return kind == ExprKind::Call || kind == ExprKind::New; }
  const Expr* target() const { return has_target ? &operands.front() : nullptr; }
  std::span<const Expr> args() const {
    if (kind != ExprKind::Call && kind != ExprKind::New) return {};
    return std::span<const Expr>(operands).subspan(has_target ? 1 : 0);
  }
};

struct SourceSpan {
  int begin = 0;
  int end = 0;
  bool operator==(const SourceSpan&) const = default;
};

// Flattened view of one call site within a statement.
struct CallExpr {
  std::string callee_name;
  // Source text of the receiver: a variable, `this`, a type name for static
  // calls, or a rendered expression for chained calls.
  std::optional<std::string> receiver;
  std::vector<Expr> args;
  // Variable that receives the call's value, set on the outermost call of a
  // declaration initializer or simple assignment.
  std::optional<std::string> bound_to;
  bool is_constructor = false;
  int id = -1;
  int line = 0;

  bool operator==(const CallExpr&) const = default;
};

enum class StmtKind { LocalDecl, Expression, AssertCall, Control, Return, Other };

struct Stmt {
  StmtKind kind = StmtKind::Other;
  // "if", "for", "try", "block", "throw", ... for Control and Other.
  std::string keyword;
  // Declaration initializer, expression, return value or control conditions.
  std::vector<Expr> exprs;
  // Nested statements in source order.
  std::vector<Stmt> children;
  // Calls of `exprs` in post-order (innermost first). Calls inside lambda
  // bodies belong to the lambda's own statements.
  std::vector<CallExpr> calls;
  std::optional<std::string> assigned_var;
  std::string declared_type;
  SourceSpan span;

  bool operator==(const Stmt&) const = default;
};

struct Annotation {
  std::string name;
  // Raw argument text without the surrounding parentheses.
  std::string arguments;
  bool operator==(const Annotation&) const = default;
};

struct Param {
  std::string name;
  std::string type;
  bool operator==(const Param&) const = default;
};

struct FieldDecl {
  std::string name;
  std::string type;
  bool is_static = false;
  bool is_final = false;
  std::optional<Expr> initializer;
  int line = 0;
  bool operator==(const FieldDecl&) const = default;
};

enum class Visibility { Public, Protected, Package, Private };

struct MethodDecl {
  std::string name;
  bool is_constructor = false;
  bool is_static = false;
  bool is_abstract = false;
  bool is_varargs = false;
  Visibility visibility = Visibility::Package;
  std::vector<Param> params;
  std::string return_type = "void";
  // Absent for abstract and interface methods.
  std::optional<std::vector<Stmt>> body;
  std::vector<Annotation> annotations;
  SourceSpan span;

  bool has_annotation(std::string_view annotation) const;
  bool operator==(const MethodDecl&) const = default;
};

enum class TypeKind { Class, Interface, Enum, Record, Annotation };

enum class SourceTag { Test, Production, External };

std::string_view to_string(SourceTag tag);

struct TypeDecl {
  std::string qualified_name;
  std::string simple_name;
  std::string package_name;
  // Qualified name of the enclosing type for nested declarations.
  std::string enclosing;
  std::string file;
  SourceTag origin = SourceTag::Production;
  TypeKind kind = TypeKind::Class;
  bool is_abstract = false;
  bool is_test_class = false;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  // As written in the source until the model resolves them.
  std::vector<std::string> supertypes;
  std::vector<std::string> imports;
  std::vector<std::string> static_imports;
  SourceSpan span;

  const FieldDecl* find_field(std::string_view field_name) const;
  bool operator==(const TypeDecl&) const = default;
};

// Strips generic arguments and annotations: "java.util.List<Foo>" -> "java.util.List".
std::string erase_generics(std::string_view type);

// Last dotted segment of a (possibly qualified) name.
std::string_view simple_name_of(std::string_view name);

// Renders an expression back to compact Java-like source text.
std::string render(const Expr& expr);

// Pre-order walk over every expression reachable from the statements,
// including nested statements, lambda bodies and switch bodies.
void walk_exprs(const Expr& expr, const std::function<void(const Expr&)>& fn);
void walk_exprs(const std::vector<Stmt>& stmts, const std::function<void(const Expr&)>& fn);

// Statements in source order with nested statements spliced in after their
// parent.
void flatten(const std::vector<Stmt>& stmts, std::vector<const Stmt*>& out);

}  // namespace eagertest::java
