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

#include "eagertest/resolver.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace eagertest {

using java::Expr;
using java::ExprKind;
using java::MethodDecl;
using java::TypeDecl;

namespace {

const std::set<std::string, std::less<>> kPrimitives = {"boolean", "byte", "char",  "short", "int",
                                                        "long",    "float", "double", "void",  "null"};

bool arity_matches(const MethodDecl& m, std::size_t argc) {
  if (m.params.size() == argc) return true;
  return m.is_varargs && argc + 1 >= m.params.size();
}

}  // namespace

std::string ResolvedMethod::display() const {
  std::string owner = declaring != nullptr ? declaring->simple_name : "?";
  if (method == nullptr) return owner + ".<init>/0";
  std::string name = method->is_constructor ? "<init>" : method->name;
  return owner + "." + name + "/" + std::to_string(method->params.size());
}

TypeScope::TypeScope(const java::CodeModel& model, const TypeDecl* context)
    : model_(&model), context_(context) {}

void TypeScope::declare(const std::string& name, const std::string& declared_type) {
  declare(name, make_ref(declared_type));
}

void TypeScope::declare(const std::string& name, TypeRef type) { vars_[name] = std::move(type); }

const TypeRef* TypeScope::lookup(const std::string& name) const {
  auto it = vars_.find(name);
  return it == vars_.end() ? nullptr : &it->second;
}

TypeRef TypeScope::make_ref(std::string_view type_text, const TypeDecl* where) const {
  TypeRef ref;
  ref.name = java::erase_generics(type_text);
  if (ref.name.empty() || kPrimitives.count(ref.name) || ref.name.ends_with("[]")) return ref;
  ref.decl = model_->resolve_type(ref.name, where != nullptr ? where : context_);
  if (ref.decl != nullptr) ref.name = ref.decl->qualified_name;
  return ref;
}

std::optional<TypeRef> TypeScope::field_type(const TypeDecl& owner, const std::string& field) const {
  if (const auto* f = owner.find_field(field)) return make_ref(f->type, &owner);
  for (const TypeDecl* super : model_->supertypes_of(owner)) {
    if (const auto* f = super->find_field(field)) return make_ref(f->type, super);
  }
  return std::nullopt;
}

TypeRef TypeScope::type_of(const Expr& e) const {
  switch (e.kind) {
    case ExprKind::Literal:
      return TypeRef{e.type};
    case ExprKind::Name: {
      if (const TypeRef* var = lookup(e.text)) return *var;
      for (const TypeDecl* c = context_; c != nullptr;
           c = c->enclosing.empty() ? nullptr : model_->find(c->enclosing)) {
        if (auto f = field_type(*c, e.text)) return *f;
      }
      if (const TypeDecl* t = model_->resolve_type(e.text, context_)) return TypeRef{t->qualified_name, t, true};
      if (!e.text.empty() && std::isupper(static_cast<unsigned char>(e.text[0]))) return TypeRef{e.text, nullptr, true};
      return {};
    }
    case ExprKind::FieldAccess: {
      TypeRef target = type_of(e.operands[0]);
      if (target.decl != nullptr) {
        if (auto f = field_type(*target.decl, e.text)) return *f;
        if (target.is_type_name) {
          if (const TypeDecl* nested = model_->find(target.decl->qualified_name + "." + e.text)) {
            return TypeRef{nested->qualified_name, nested, true};
          }
        }
      }
      if (target.name.ends_with("[]") && e.text == "length") return TypeRef{"int"};
      std::string dotted = java::render(e);
      if (const TypeDecl* t = model_->find(dotted)) return TypeRef{t->qualified_name, t, true};
      return {};
    }
    case ExprKind::Call: {
      Resolution r = resolve(e, true);
      if (const auto* m = std::get_if<ResolvedMethod>(&r)) {
        if (m->method != nullptr && !m->method->is_constructor) return make_ref(m->method->return_type, m->declaring);
      }
      return {};
    }
    case ExprKind::New:
    case ExprKind::Cast:
      return make_ref(e.type);
    case ExprKind::NewArray:
      return TypeRef{java::erase_generics(e.type)};
    case ExprKind::This:
      return context_ != nullptr ? TypeRef{context_->qualified_name, context_} : TypeRef{};
    case ExprKind::Conditional:
      return type_of(e.operands[1]);
    case ExprKind::ArrayAccess: {
      TypeRef base = type_of(e.operands[0]);
      if (base.name.ends_with("[]")) return make_ref(base.name.substr(0, base.name.size() - 2));
      return {};
    }
    case ExprKind::InstanceOf:
      return TypeRef{"boolean"};
    default:
      return {};
  }
}

Resolution TypeScope::lookup_constructor(const TypeDecl& type, std::span<const Expr> args, bool value_used,
                                         std::string_view callee) const {
  std::vector<const MethodDecl*> candidates;
  bool any_declared = false;
  for (const auto& m : type.methods) {
    if (!m.is_constructor) continue;
    any_declared = true;
    if (arity_matches(m, args.size())) candidates.push_back(&m);
  }
  if (!candidates.empty()) return ResolvedMethod{&type, best_overload(candidates, args), true, candidates.size() > 1};
  if (!any_declared && args.empty()) return ResolvedMethod{&type, nullptr, true, false};
  return Unresolved{std::string(callee), type.qualified_name, true, value_used,
                    "no constructor of " + type.simple_name + " takes " + std::to_string(args.size()) + " arguments"};
}

const MethodDecl* TypeScope::best_overload(const std::vector<const MethodDecl*>& candidates,
                                           std::span<const Expr> args) const {
  if (candidates.size() == 1) return candidates.front();
  std::vector<std::string> arg_types;
  for (const auto& a : args) arg_types.emplace_back(java::simple_name_of(type_of(a).name));
  const MethodDecl* best = candidates.front();
  int best_score = -1;
  for (const MethodDecl* m : candidates) {
    int score = 0;
    for (std::size_t i = 0; i < m->params.size() && i < arg_types.size(); ++i) {
      score += !arg_types[i].empty() && arg_types[i] == java::simple_name_of(java::erase_generics(m->params[i].type));
    }
    if (score > best_score) {
      best = m;
      best_score = score;
    }
  }
  return best;
}

Resolution TypeScope::lookup_method(const TypeDecl& type, const Expr& call, bool value_used,
                                    bool include_self) const {
  const auto args = call.args();
  std::vector<const TypeDecl*> chain;
  if (include_self) chain.push_back(&type);
  for (const TypeDecl* s : model_->supertypes_of(type)) chain.push_back(s);
  bool name_seen = false;
  for (const TypeDecl* t : chain) {
    std::vector<const MethodDecl*> candidates;
    for (const auto& m : t->methods) {
      if (m.is_constructor || m.name != call.text) continue;
      name_seen = true;
      if (arity_matches(m, args.size())) candidates.push_back(&m);
    }
    if (!candidates.empty()) return ResolvedMethod{t, best_overload(candidates, args), false, candidates.size() > 1};
  }
  return Unresolved{call.text, type.qualified_name, false, value_used,
                    name_seen ? "no overload with matching arity" : "method not declared in source"};
}

Resolution TypeScope::resolve(const Expr& call, bool value_used) const {
  if (call.kind == ExprKind::New) {
    TypeRef t = make_ref(call.type);
    std::string callee(java::simple_name_of(t.name));
    if (t.decl == nullptr) return Unresolved{callee, t.name, true, value_used, "no source for type"};
    return lookup_constructor(*t.decl, call.args(), value_used, callee);
  }

  const Expr* target = call.target();
  if (target == nullptr && (call.text == "this" || call.text == "super")) {
    if (context_ == nullptr) return Unresolved{call.text, "", true, false, "no enclosing type"};
    const TypeDecl* owner = context_;
    if (call.text == "super") {
      auto supers = model_->supertypes_of(*context_);
      if (supers.empty()) return Unresolved{call.text, "", true, false, "superclass has no source"};
      owner = supers.front();
    }
    return lookup_constructor(*owner, call.args(), false, call.text);
  }

  if (target == nullptr || target->kind == ExprKind::This) {
    for (const TypeDecl* c = context_; c != nullptr; c = c->enclosing.empty() ? nullptr : model_->find(c->enclosing)) {
      Resolution r = lookup_method(*c, call, value_used);
      if (std::holds_alternative<ResolvedMethod>(r)) return r;
      if (target != nullptr) break;
    }
    if (target == nullptr && context_ != nullptr) {
      for (const auto& imp : context_->static_imports) {
        auto member = java::simple_name_of(imp);
        if (member != call.text && member != "*") continue;
        std::string owner_name = imp.substr(0, imp.size() - member.size() - 1);
        if (const TypeDecl* owner = model_->find(owner_name)) {
          Resolution r = lookup_method(*owner, call, value_used);
          if (std::holds_alternative<ResolvedMethod>(r)) return r;
        }
      }
    }
    return Unresolved{call.text, context_ != nullptr ? context_->qualified_name : "", false, value_used,
                      "unqualified call not declared in source"};
  }

  if (target->kind == ExprKind::Super) {
    if (context_ == nullptr) return Unresolved{call.text, "", false, value_used, "no enclosing type"};
    return lookup_method(*context_, call, value_used, false);
  }

  TypeRef receiver = type_of(*target);
  if (receiver.decl == nullptr) {
    std::string why = receiver.known() ? "no source for receiver type" : "receiver type unknown";
    return Unresolved{call.text, receiver.name, false, value_used, why};
  }
  return lookup_method(*receiver.decl, call, value_used);
}

TypeScope scope_for_method(const java::CodeModel& model, const TypeDecl& owner, const MethodDecl& method) {
  TypeScope scope(model, &owner);
  for (const auto& p : method.params) scope.declare(p.name, p.type);
  if (!method.body) return scope;
  std::vector<const java::Stmt*> flat;
  java::flatten(*method.body, flat);
  for (const java::Stmt* s : flat) {
    if (s->kind != java::StmtKind::LocalDecl || !s->assigned_var) continue;
    if (s->declared_type == "var" && !s->exprs.empty()) {
      scope.declare(*s->assigned_var, scope.type_of(s->exprs.front()));
    } else {
      scope.declare(*s->assigned_var, s->declared_type);
    }
  }
  return scope;
}

namespace {

// Only the outermost call of an expression statement can have its value
// dropped; everything else feeds a binding, an argument or a receiver.
bool call_value_used(const java::CallExpr& call, const java::TestCase& context) {
  if (call.bound_to) return true;
  if (!context.method->body) return false;
  std::vector<const java::Stmt*> flat;
  java::flatten(*context.method->body, flat);
  for (const java::Stmt* s : flat) {
    for (std::size_t i = 0; i < s->calls.size(); ++i) {
      if (s->calls[i].id != call.id || s->calls[i].line != call.line) continue;
      const bool outermost = i + 1 == s->calls.size();
      return !(outermost && s->kind == java::StmtKind::Expression);
    }
  }
  return false;
}

}  // namespace

Resolution resolve_call(const java::CallExpr& call, const java::TestCase& context, const java::CodeModel& model) {
  TypeScope scope = scope_for_method(model, *context.owner, *context.method);
  const bool value_used = call_value_used(call, context);
  Expr e;
  if (call.is_constructor) {
    e.kind = ExprKind::New;
    e.type = call.callee_name;
  } else {
    e.kind = ExprKind::Call;
    e.text = call.callee_name;
  }
  if (call.receiver && !call.is_constructor) {
    const std::string& text = *call.receiver;
    bool dotted_name = std::all_of(text.begin(), text.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '.';
    });
    if (!dotted_name) {
      return Unresolved{call.callee_name, "", false, value_used, "receiver expression not typed"};
    }
    Expr target;
    std::size_t start = 0;
    for (std::size_t dot = text.find('.'); ; dot = text.find('.', start)) {
      std::string part = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (start == 0) {
        target.kind = part == "this" ? ExprKind::This : ExprKind::Name;
        target.text = part;
      } else {
        Expr access;
        access.kind = ExprKind::FieldAccess;
        access.text = part;
        access.operands.push_back(std::move(target));
        target = std::move(access);
      }
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    e.has_target = true;
    e.operands.push_back(std::move(target));
  }
  for (const auto& a : call.args) e.operands.push_back(a);
  const Expr* target = e.target();
  if (target != nullptr && target->kind == ExprKind::Name && scope.lookup(target->text) == nullptr &&
      context.owner->find_field(target->text) == nullptr &&
      model.resolve_type(target->text, context.owner) == nullptr &&
      !std::isupper(static_cast<unsigned char>(target->text[0]))) {
    return Unresolved{call.callee_name, "", false, value_used, "undeclared receiver variable"};
  }
  return scope.resolve(e, value_used);
}

}  // namespace eagertest
