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

#include "eagertest/java/ast.hpp"

namespace eagertest::java {

bool Expr::operator==(const Expr&) const = default;

bool MethodDecl::has_annotation(std::string_view annotation) const {
  for (const auto& a : annotations) {
    if (simple_name_of(a.name) == annotation) return true;
  }
  return false;
}

const FieldDecl* TypeDecl::find_field(std::string_view field_name) const {
  for (const auto& f : fields) {
    if (f.name == field_name) return &f;
  }
  return nullptr;
}

std::string_view to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::Test:
      return "test";
    case SourceTag::Production:
      return "production";
    case SourceTag::External:
      return "external";
  }
  return "external";
}

std::string erase_generics(std::string_view type) {
  std::string out;
  int depth = 0;
  for (char c : type) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      if (depth > 0) --depth;
    } else if (depth == 0 && c != ' ') {
      out.push_back(c);
    }
  }
  return out;
}

std::string_view simple_name_of(std::string_view name) {
  auto dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

namespace {

std::string join_args(std::span<const Expr> args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += render(args[i]);
  }
  return out;
}

}  // namespace

std::string render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
    case ExprKind::Name:
      return e.text;
    case ExprKind::This:
      return "this";
    case ExprKind::Super:
      return "super";
    case ExprKind::FieldAccess:
      return render(e.operands[0]) + "." + e.text;
    case ExprKind::Call: {
      std::string prefix = e.has_target ? render(e.operands[0]) + "." : "";
      return prefix + e.text + "(" + join_args(e.args()) + ")";
    }
    case ExprKind::New:
      return "new " + e.type + "(" + join_args(e.args()) + ")";
    case ExprKind::NewArray:
      return "new " + e.type + "[]";
    case ExprKind::ArrayInit:
      return "{" + join_args(e.operands) + "}";
    case ExprKind::Assign:
    case ExprKind::Binary:
      return render(e.operands[0]) + " " + e.text + " " + render(e.operands[1]);
    case ExprKind::Unary:
      return e.text + render(e.operands[0]);
    case ExprKind::Postfix:
      return render(e.operands[0]) + e.text;
    case ExprKind::Cast:
      return "(" + e.type + ") " + render(e.operands[0]);
    case ExprKind::Conditional:
      return render(e.operands[0]) + " ? " + render(e.operands[1]) + " : " + render(e.operands[2]);
    case ExprKind::ArrayAccess:
      return render(e.operands[0]) + "[" + render(e.operands[1]) + "]";
    case ExprKind::ClassLiteral:
      return e.type + ".class";
    case ExprKind::Lambda:
      return "(" + [&] {
        std::string p;
        for (std::size_t i = 0; i < e.params.size(); ++i) p += (i ? ", " : "") + e.params[i];
        return p;
      }() + ") -> {...}";
    case ExprKind::MethodRef:
      return (e.has_target ? render(e.operands[0]) : e.type) + "::" + e.text;
    case ExprKind::InstanceOf:
      return render(e.operands[0]) + " instanceof " + e.type;
    case ExprKind::Switch:
      return "switch (...)";
  }
  return "?";
}

void walk_exprs(const Expr& expr, const std::function<void(const Expr&)>& fn) {
  fn(expr);
  for (const auto& child : expr.operands) walk_exprs(child, fn);
  walk_exprs(expr.body, fn);
}

void walk_exprs(const std::vector<Stmt>& stmts, const std::function<void(const Expr&)>& fn) {
  for (const auto& s : stmts) {
    for (const auto& e : s.exprs) walk_exprs(e, fn);
    walk_exprs(s.children, fn);
  }
}

void flatten(const std::vector<Stmt>& stmts, std::vector<const Stmt*>& out) {
  for (const auto& s : stmts) {
    out.push_back(&s);
    flatten(s.children, out);
  }
}

}  // namespace eagertest::java
