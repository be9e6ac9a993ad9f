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

#include "eagertest/stereotypes.hpp"

#include <algorithm>
#include <cctype>

namespace eagertest {

using java::Expr;
using java::ExprKind;
using java::MethodDecl;
using java::Stmt;
using java::StmtKind;
using java::TypeDecl;

std::string_view to_string(Stereotype s) {
  switch (s) {
    case Stereotype::Creational:
      return "creational";
    case Stereotype::Mutator:
      return "mutator";
    case Stereotype::Get:
      return "get";
    case Stereotype::InternalProducer:
      return "internal-producer";
    case Stereotype::ExternalProducer:
      return "external-producer";
    case Stereotype::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

bool has_prefix_word(std::string_view name, std::string_view prefix) {
  return name.size() > prefix.size() && name.starts_with(prefix) &&
         std::isupper(static_cast<unsigned char>(name[prefix.size()]));
}

std::string lower_first(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

// Attribute named by a conventional accessor or mutator prefix.
std::optional<std::string> suffix_after(std::string_view name, std::initializer_list<std::string_view> prefixes) {
  for (std::string_view p : prefixes) {
    if (has_prefix_word(name, p)) return lower_first(name.substr(p.size()));
  }
  return std::nullopt;
}

class EffectWalker {
 public:
  EffectWalker(const ResolvedMethod& target, const java::CodeModel& model, int depth,
               std::vector<const MethodDecl*>& stack)
      : target_(target),
        model_(model),
        depth_(depth),
        stack_(stack),
        scope_(scope_for_method(model, *target.declaring, *target.method)) {
    for (std::size_t i = 0; i < target.method->params.size(); ++i) {
      locals_.insert(target.method->params[i].name);
      params_[target.method->params[i].name] = i;
    }
    std::vector<const Stmt*> flat;
    java::flatten(*target.method->body, flat);
    for (const Stmt* s : flat) {
      if (s->kind == StmtKind::LocalDecl && s->assigned_var) locals_.insert(*s->assigned_var);
    }
    java::walk_exprs(*target.method->body, [&](const Expr& e) {
      if (e.kind == ExprKind::Lambda) locals_.insert(e.params.begin(), e.params.end());
    });
  }

  FieldEffect run() {
    stmts(*target_.method->body, false);
    if (!returns_.empty() && returns_.front() &&
        std::all_of(returns_.begin(), returns_.end(), [&](const auto& r) { return r == returns_.front(); })) {
      out_.returns_field = returns_.front();
    }
    out_.has_return_value = !returns_.empty();
    return out_;
  }

 private:
  bool is_field(const std::string& name) const {
    if (locals_.count(name)) return false;
    if (target_.declaring->find_field(name)) return true;
    for (const TypeDecl* s : model_.supertypes_of(*target_.declaring)) {
      if (s->find_field(name)) return true;
    }
    return false;
  }

  std::optional<std::string> field_ref(const Expr& e) const {
    if (e.kind == ExprKind::Name && is_field(e.text)) return e.text;
    if (e.kind == ExprKind::FieldAccess && e.operands[0].kind == ExprKind::This) return e.text;
    return std::nullopt;
  }

  std::optional<std::size_t> param_ref(const Expr& e) const {
    if (e.kind != ExprKind::Name) return std::nullopt;
    auto it = params_.find(e.text);
    return it == params_.end() ? std::nullopt : std::make_optional(it->second);
  }

  void stmts(const std::vector<Stmt>& body, bool in_lambda) {
    for (const auto& s : body) {
      for (const auto& e : s.exprs) expr(e);
      if (s.kind == StmtKind::Return && !in_lambda && !s.exprs.empty()) returns_.push_back(field_ref(s.exprs[0]));
      stmts(s.children, in_lambda);
    }
  }

  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Assign: {
        const Expr& lhs = e.operands[0];
        if (auto f = field_ref(lhs)) {
          out_.writes.insert(*f);
          if (e.text != "=") out_.reads.insert(*f);
        } else if (lhs.kind == ExprKind::FieldAccess && param_ref(lhs.operands[0])) {
          out_.param_writes[*param_ref(lhs.operands[0])].insert(lhs.text);
        } else if (lhs.kind == ExprKind::ArrayAccess && field_ref(lhs.operands[0])) {
          out_.writes.insert(*field_ref(lhs.operands[0]));
          expr(lhs.operands[1]);
        } else {
          expr(lhs);
        }
        expr(e.operands[1]);
        return;
      }
      case ExprKind::Unary:
      case ExprKind::Postfix:
        if (e.text == "++" || e.text == "--") {
          if (auto f = field_ref(e.operands[0])) {
            out_.reads.insert(*f);
            out_.writes.insert(*f);
            return;
          }
        }
        break;
      case ExprKind::Name:
        if (is_field(e.text)) out_.reads.insert(e.text);
        return;
      case ExprKind::FieldAccess:
        if (e.operands[0].kind == ExprKind::This) {
          out_.reads.insert(e.text);
          return;
        }
        break;
      case ExprKind::Call:
        call(e);
        for (const auto& a : e.args()) expr(a);
        return;
      case ExprKind::Lambda:
        stmts(e.body, true);
        return;
      case ExprKind::Switch:
        expr(e.operands[0]);
        stmts(e.body, true);
        return;
      default:
        break;
    }
    for (const auto& child : e.operands) expr(child);
  }

  // Effects of a callee on the receiver object, or nullopt when the depth
  // budget or a cycle stops the walk.
  std::optional<FieldEffect> follow(const ResolvedMethod& callee) {
    if (callee.method == nullptr || !callee.method->body) return FieldEffect{};
    if (depth_ <= 0 || std::find(stack_.begin(), stack_.end(), callee.method) != stack_.end()) {
      out_.approximate = true;
      return std::nullopt;
    }
    stack_.push_back(callee.method);
    FieldEffect sub = EffectWalker(callee, model_, depth_ - 1, stack_).run();
    stack_.pop_back();
    out_.approximate |= sub.approximate;
    return sub;
  }

  bool same_object(const ResolvedMethod& callee) const {
    return callee.declaring == target_.declaring || model_.is_subtype_of(*target_.declaring, callee.declaring->qualified_name);
  }

  void call(const Expr& e) {
    const Expr* target = e.target();
    Resolution r = scope_.resolve(e, true);
    const auto* resolved = std::get_if<ResolvedMethod>(&r);

    if (target == nullptr || target->kind == ExprKind::This || target->kind == ExprKind::Super) {
      if (resolved == nullptr || !same_object(*resolved)) return;
      if (auto sub = follow(*resolved)) {
        out_.reads.insert(sub->reads.begin(), sub->reads.end());
        out_.writes.insert(sub->writes.begin(), sub->writes.end());
        for (const auto& [index, fields] : sub->param_writes) {
          if (index >= e.args().size()) continue;
          const Expr& arg = e.args()[index];
          auto p = param_ref(arg);
          if (p && !fields.empty()) out_.param_writes[*p].insert(fields.begin(), fields.end());
        }
      }
      return;
    }

    if (auto f = field_ref(*target)) {
      bool mutates = false;
      if (resolved != nullptr && resolved->method != nullptr && resolved->method->body) {
        auto sub = follow(*resolved);
        mutates = sub && (!sub->writes.empty() || !sub->param_writes.empty());
      } else {
        mutates = is_mutating_verb(e.text);
      }
      (mutates ? out_.writes : out_.reads).insert(*f);
      return;
    }

    if (auto p = param_ref(*target)) {
      if (resolved == nullptr) return;
      if (resolved->method != nullptr && resolved->method->body) {
        auto sub = follow(*resolved);
        if (sub && !sub->writes.empty()) out_.param_writes[*p].insert(sub->writes.begin(), sub->writes.end());
      } else if (auto attr = suffix_after(e.text, {"set", "add", "remove", "clear"})) {
        out_.param_writes[*p].insert(*attr);
      }
      return;
    }
    expr(*target);
  }

  const ResolvedMethod& target_;
  const java::CodeModel& model_;
  int depth_;
  std::vector<const MethodDecl*>& stack_;
  TypeScope scope_;
  std::set<std::string> locals_;
  std::map<std::string, std::size_t> params_;
  std::vector<std::optional<std::string>> returns_;
  FieldEffect out_;
};

bool is_static_factory(const ResolvedMethod& m, const java::CodeModel& model) {
  if (m.method == nullptr || !m.method->is_static || m.method->return_type == "void") return false;
  const TypeDecl* ret = model.resolve_type(java::erase_generics(m.method->return_type), m.declaring);
  return ret == m.declaring;
}

std::set<std::string> instance_fields(const TypeDecl& type) {
  std::set<std::string> out;
  for (const auto& f : type.fields) {
    if (!f.is_static) out.insert(f.name);
  }
  return out;
}

}  // namespace

bool is_mutating_verb(std::string_view name) {
  static const std::set<std::string, std::less<>> kVerbs = {
      "add",     "addAll",  "put",     "putAll",  "remove",   "removeAll",  "removeIf", "retainAll",
      "clear",   "set",     "push",    "pop",     "offer",    "poll",       "insert",   "append",
      "prepend", "delete",  "replace", "replaceAll", "sort",  "reset",      "close",    "write",
      "update",  "merge",   "compute", "computeIfAbsent", "computeIfPresent", "addFirst", "addLast",
      "removeFirst", "removeLast", "setLength"};
  if (kVerbs.count(name)) return true;
  return has_prefix_word(name, "set") || has_prefix_word(name, "add") || has_prefix_word(name, "remove") ||
         has_prefix_word(name, "put");
}

FieldEffect field_effects(const ResolvedMethod& method, const java::CodeModel& model, int depth) {
  if (method.method == nullptr || !method.method->body) return {};
  std::vector<const MethodDecl*> stack = {method.method};
  return EffectWalker(method, model, depth, stack).run();
}

std::set<std::string> initialized_fields(const ResolvedMethod& ctor, const java::CodeModel& model, int depth) {
  if (ctor.method == nullptr) return instance_fields(*ctor.declaring);
  std::set<std::string> out = field_effects(ctor, model, depth).writes;
  for (const auto& f : ctor.declaring->fields) {
    if (!f.is_static && f.initializer) out.insert(f.name);
  }
  return out;
}

nlohmann::json Classification::to_json() const {
  nlohmann::json j;
  j["method"] = method;
  j["declaring_type"] = declaring_type;
  j["stereotype"] = to_string(stereotype);
  j["reads"] = effects.reads;
  j["writes"] = effects.writes;
  j["rationale_branch"] = rationale_branch;
  if (effects.approximate) j["approximate"] = true;
  if (diagnostic) j["diagnostic"] = *diagnostic;
  return j;
}

Classification classify_method(const Resolution& resolution, std::string_view cut, const java::CodeModel& model,
                               int effect_depth) {
  Classification c;
  if (const auto* u = std::get_if<Unresolved>(&resolution)) {
    c.method = u->callee;
    c.declaring_type = u->receiver_type;
    if (u->callee == "invoke" || u->callee == "newInstance") {
      c.rationale_branch = "reflective-call";
    } else if (u->value_used) {
      c.stereotype = Stereotype::ExternalProducer;
      c.rationale_branch = "external-with-value";
    } else {
      c.rationale_branch = "external-void";
    }
    return c;
  }

  const auto& r = std::get<ResolvedMethod>(resolution);
  const TypeDecl& owner = *r.declaring;
  c.method = r.display();
  c.declaring_type = owner.qualified_name;
  const bool in_cut = owner.qualified_name == cut;
  const TypeDecl* cut_decl = model.find(cut);
  const bool member_of_cut = in_cut || (cut_decl != nullptr && model.is_subtype_of(*cut_decl, owner.qualified_name));

  if (r.is_constructor || is_static_factory(r, model)) {
    c.rationale_branch = r.is_constructor ? "constructor" : "static-factory";
    if (!in_cut) {
      c.diagnostic = "creation of " + owner.simple_name + " outside the class under test";
      return c;
    }
    c.stereotype = Stereotype::Creational;
    c.initialized = r.is_constructor ? initialized_fields(r, model, effect_depth) : instance_fields(owner);
    return c;
  }

  const MethodDecl& m = *r.method;
  const bool returns_value = m.return_type != "void";
  if (!m.body) {
    if (auto attr = suffix_after(m.name, {"set", "add", "remove", "clear"})) {
      c.effects.writes = {*attr};
      c.rationale_branch = "name-mutator";
      if (member_of_cut) {
        c.stereotype = Stereotype::Mutator;
      } else {
        c.diagnostic = "mutator " + m.name + " declared outside the class under test";
      }
      return c;
    }
    if (auto attr = suffix_after(m.name, {"get", "is"}); attr && returns_value) {
      c.effects.reads = {*attr};
      c.effects.returns_field = *attr;
      c.effects.has_return_value = true;
      c.stereotype = Stereotype::Get;
      c.rationale_branch = "name-get";
      return c;
    }
    if (returns_value) {
      c.effects.has_return_value = true;
      c.stereotype = in_cut ? Stereotype::InternalProducer : Stereotype::ExternalProducer;
      c.rationale_branch = "bodyless-producer";
      return c;
    }
    c.rationale_branch = "bodyless-void";
    return c;
  }

  c.effects = field_effects(r, model, effect_depth);
  if (!c.effects.writes.empty() || !c.effects.param_writes.empty()) {
    c.rationale_branch = "writes-fields";
    if (member_of_cut) {
      c.stereotype = Stereotype::Mutator;
    } else {
      c.diagnostic = "mutator " + m.name + " declared outside the class under test";
    }
    return c;
  }
  if (c.effects.returns_field) {
    c.stereotype = Stereotype::Get;
    c.rationale_branch = "returns-field";
    return c;
  }
  if (c.effects.has_return_value || returns_value) {
    c.stereotype = in_cut ? Stereotype::InternalProducer : Stereotype::ExternalProducer;
    c.rationale_branch = in_cut ? "computed-return-in-cut" : "computed-return-outside-cut";
    return c;
  }
  c.rationale_branch = "void-without-writes";
  return c;
}

const Classification& StereotypeCache::classify(const Resolution& method, std::string_view cut) {
  Key key;
  if (const auto* r = std::get_if<ResolvedMethod>(&method)) {
    key = Key{r->declaring, r->method, r->is_constructor, std::string(cut), "", false};
  } else {
    const auto& u = std::get<Unresolved>(method);
    key = Key{nullptr, nullptr, u.is_constructor, std::string(cut), u.receiver_type + "#" + u.callee, u.value_used};
  }
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, classify_method(method, cut, *model_, depth_)).first;
  return it->second;
}

}  // namespace eagertest
