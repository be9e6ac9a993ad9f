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

// Static call resolution over the code model: declared-type tracking with
// erased generics and arity-based overload selection.

#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>

#include "eagertest/java/code_model.hpp"
#include "eagertest/java/test_cases.hpp"

namespace eagertest {

// Static type of an expression. `decl` is set when the type has source in
// the model; `is_type_name` marks a bare type used as a static receiver.
struct TypeRef {
  std::string name;
  const java::TypeDecl* decl = nullptr;
  bool is_type_name = false;

  bool known() const { return !name.empty(); }
};

struct ResolvedMethod {
  const java::TypeDecl* declaring = nullptr;
  // Null for the implicit default constructor.
  const java::MethodDecl* method = nullptr;
  bool is_constructor = false;
  // More than one overload had a matching arity.
  bool arity_tie = false;

  std::string display() const;
  bool operator==(const ResolvedMethod&) const = default;
};

struct Unresolved {
  std::string callee;
  // Best-effort static type of the receiver (empty if unknown).
  std::string receiver_type;
  bool is_constructor = false;
  // The call's value is consumed (bound, passed on, or used as a receiver).
  bool value_used = false;
  std::string reason;

  bool operator==(const Unresolved&) const = default;
};

using Resolution = std::variant<ResolvedMethod, Unresolved>;

// Variables visible at a program point, with their declared types.
class TypeScope {
 public:
  TypeScope(const java::CodeModel& model, const java::TypeDecl* context);

  const java::CodeModel& model() const { return *model_; }
  const java::TypeDecl* context() const { return context_; }

  void declare(const std::string& name, const std::string& declared_type);
  void declare(const std::string& name, TypeRef type);
  const TypeRef* lookup(const std::string& name) const;

  // Type text as written in `where` (defaults to the context) to a TypeRef.
  TypeRef make_ref(std::string_view type_text, const java::TypeDecl* where = nullptr) const;

  TypeRef type_of(const java::Expr& expr) const;

  // `call` must be a Call or New expression.
  Resolution resolve(const java::Expr& call, bool value_used) const;

 private:
  std::optional<TypeRef> field_type(const java::TypeDecl& owner, const std::string& field) const;
  Resolution lookup_method(const java::TypeDecl& type, const java::Expr& call, bool value_used,
                           bool include_self = true) const;
  Resolution lookup_constructor(const java::TypeDecl& type, std::span<const java::Expr> args, bool value_used,
                                std::string_view callee) const;
  // Among arity matches, prefers the most parameters whose simple type name
  // equals the argument's static type; earlier declarations win ties.
  const java::MethodDecl* best_overload(const std::vector<const java::MethodDecl*>& candidates,
                                        std::span<const java::Expr> args) const;

  const java::CodeModel* model_;
  const java::TypeDecl* context_;
  std::map<std::string, TypeRef> vars_;
};

// Declares every parameter and local of `method` in a fresh scope. Locals are
// collected flow-insensitively, which is exact for well-formed Java without
// shadowing.
TypeScope scope_for_method(const java::CodeModel& model, const java::TypeDecl& owner,
                           const java::MethodDecl& method);

// Resolves one flattened call site of a test method.
Resolution resolve_call(const java::CallExpr& call, const java::TestCase& context,
                        const java::CodeModel& model);

}  // namespace eagertest
