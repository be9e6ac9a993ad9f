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

#include "eagertest/flow.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace eagertest {

using java::Expr;
using java::ExprKind;
using java::MethodDecl;
using java::Stmt;
using java::StmtKind;
using java::TypeDecl;

OutcomeFact OutcomeFact::returned(std::string owner, std::string name) {
  return OutcomeFact{FactKind::Returned, std::move(owner), std::move(name), std::nullopt, Pending::None, -1};
}

OutcomeFact OutcomeFact::attribute(std::string owner, std::string name, int version) {
  return OutcomeFact{FactKind::Attribute, std::move(owner), std::move(name), version, Pending::None, -1};
}

OutcomeFact OutcomeFact::unversioned(std::string owner, std::string name, Pending role, int site) {
  return OutcomeFact{FactKind::Attribute, std::move(owner), std::move(name), std::nullopt, role, site};
}

std::string OutcomeFact::render() const {
  if (kind == FactKind::Returned) return owner;
  return owner + "." + name + "@v" + (version ? std::to_string(*version) : "?");
}

std::vector<std::string> render_facts(const FactSet& facts) {
  std::vector<std::string> out;
  for (const auto& f : facts) out.push_back(f.render());
  return out;
}

namespace {

struct Value {
  std::optional<std::string> object;
  FactSet facts;
};

struct Eval {
  Value value;
  // Facts an assertion verifies when this expression is one of its arguments.
  FactSet contribution;
};

void merge_into(FactSet& into, const FactSet& from) { into.insert(from.begin(), from.end()); }

java::CallExpr to_call_expr(const Expr& e, const std::optional<std::string>& bound) {
  java::CallExpr c;
  c.callee_name = e.kind == ExprKind::New ? std::string(java::simple_name_of(e.type)) : e.text;
  c.is_constructor = e.kind == ExprKind::New;
  if (const Expr* t = e.target()) c.receiver = java::render(*t);
  for (const auto& a : e.args()) c.args.push_back(a);
  c.bound_to = bound;
  c.id = e.call_id;
  c.line = e.line;
  return c;
}

class Linearizer {
 public:
  Linearizer(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
             StereotypeCache& cache, std::vector<std::string>* diagnostics)
      : test_(test), model_(model), options_(options), cache_(cache), diagnostics_(diagnostics) {}

  std::vector<Record> run() {
    frames_.push_back(Frame{scope_for_method(model_, *test_.owner, *test_.method), {}, test_.method, {}, {}});
    if (test_.method->body) stmts(*test_.method->body);
    expected_exception();
    return std::move(records_);
  }

 private:
  struct Frame {
    TypeScope scope;
    std::map<std::string, Value> vars;
    const MethodDecl* method;
    std::optional<Eval> ret;
    std::optional<std::string> return_hint;
  };

  void diagnose(std::string message) {
    if (diagnostics_ != nullptr) diagnostics_->push_back(std::move(message));
  }

  Frame& frame() { return frames_.back(); }

  std::string fresh_id(const std::string& base) {
    if (used_ids_.insert(base).second) return base;
    for (int k = 2;; ++k) {
      std::string candidate = base + "#" + std::to_string(k);
      if (used_ids_.insert(candidate).second) return candidate;
    }
  }

  // ---- statements -----------------------------------------------------------

  void stmts(const std::vector<Stmt>& body) {
    for (const auto& s : body) stmt(s);
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::LocalDecl: {
        Value v;
        if (!s.exprs.empty()) v = eval(s.exprs.front(), s.assigned_var, true).value;
        if (s.assigned_var) frame().vars[*s.assigned_var] = std::move(v);
        break;
      }
      case StmtKind::Expression:
        for (const auto& e : s.exprs) eval(e, std::nullopt, false);
        break;
      case StmtKind::AssertCall:
        assertion(s);
        break;
      case StmtKind::Return:
        if (!s.exprs.empty()) {
          Eval r = eval(s.exprs.front(), frame().return_hint, true);
          if (!frame().ret) {
            frame().ret = std::move(r);
          } else {
            merge_into(frame().ret->value.facts, r.value.facts);
            merge_into(frame().ret->contribution, r.contribution);
          }
        }
        break;
      default:
        for (const auto& e : s.exprs) eval(e, std::nullopt, true);
        break;
    }
    stmts(s.children);
  }

  void assertion(const Stmt& s) {
    const Expr& call = s.exprs.front();
    AssertRecord a;
    a.statement = s;
    AssertRecord* outer = current_assert_;
    current_assert_ = &a;
    if (call.text == "assertThrows") {
      a.exceptional = true;
      for (const auto& arg : call.args()) {
        if (arg.kind != ExprKind::Lambda) continue;
        std::size_t before = a.nested.size();
        lambda(arg);
        if (a.nested.size() > before) {
          const CallRecord& last = a.nested.back();
          a.verified = last.outcome.empty() ? last.verifies : last.outcome;
        }
      }
    } else {
      for (const auto& arg : call.args()) {
        if (arg.kind == ExprKind::Name && !frame().vars.count(arg.text) && !frame().scope.type_of(arg).known()) {
          std::string id = fresh_id("?" + arg.text);
          diagnose("assert argument '" + arg.text + "' is not a tracked variable; synthesized " + id);
          a.verified.insert(OutcomeFact::returned(id, arg.text));
          continue;
        }
        merge_into(a.verified, eval(arg, std::nullopt, true).contribution);
      }
    }
    current_assert_ = outer;
    a.index = next_index_++;
    records_.push_back(std::move(a));
  }

  void expected_exception() {
    bool expects = std::any_of(test_.method->annotations.begin(), test_.method->annotations.end(),
                               [](const java::Annotation& an) {
                                 return java::simple_name_of(an.name) == "Test" &&
                                        an.arguments.find("expected") != std::string::npos;
                               });
    if (!expects) return;
    const CallRecord* last = nullptr;
    for (const auto& r : records_) {
      if (const auto* c = std::get_if<CallRecord>(&r)) last = c;
    }
    AssertRecord a;
    a.statement.kind = StmtKind::AssertCall;
    a.statement.keyword = "expected-exception";
    a.statement.span = test_.method->span;
    a.exceptional = true;
    if (last != nullptr) a.verified = last->outcome.empty() ? last->verifies : last->outcome;
    a.index = next_index_++;
    records_.push_back(std::move(a));
  }

  void lambda(const Expr& e) {
    for (const auto& p : e.params) frame().vars[p] = Value{};
    stmts(e.body);
  }

  // ---- expressions ----------------------------------------------------------

  Eval eval(const Expr& e, const std::optional<std::string>& hint, bool used) {
    switch (e.kind) {
      case ExprKind::Literal:
      case ExprKind::ClassLiteral:
      case ExprKind::This:
      case ExprKind::Super:
      case ExprKind::MethodRef:
        return {};
      case ExprKind::Name: {
        auto it = frame().vars.find(e.text);
        if (it == frame().vars.end()) return {};
        return Eval{it->second, it->second.facts};
      }
      case ExprKind::Cast:
        return eval(e.operands[0], hint, used);
      case ExprKind::Assign: {
        const Expr& lhs = e.operands[0];
        const bool to_var = lhs.kind == ExprKind::Name;
        Eval rhs = eval(e.operands[1], to_var && e.text == "=" ? std::make_optional(lhs.text) : std::nullopt, true);
        if (to_var) {
          Value& slot = frame().vars[lhs.text];
          if (e.text == "=") {
            slot = rhs.value;
          } else {
            merge_into(slot.facts, rhs.value.facts);
          }
        } else {
          eval(lhs, std::nullopt, true);
        }
        return rhs;
      }
      case ExprKind::Call:
      case ExprKind::New:
        return call(e, hint, used);
      case ExprKind::Lambda:
        lambda(e);
        return {};
      case ExprKind::Switch:
        eval(e.operands[0], std::nullopt, true);
        stmts(e.body);
        return {};
      default: {
        Eval out;
        for (const auto& child : e.operands) {
          Eval c = eval(child, std::nullopt, true);
          merge_into(out.value.facts, c.value.facts);
          merge_into(out.contribution, c.contribution);
        }
        return out;
      }
    }
  }

  std::optional<std::pair<const TypeDecl*, const MethodDecl*>> find_helper(const Expr& e) const {
    if (e.kind != ExprKind::Call || e.text == "this" || e.text == "super") return std::nullopt;
    if (e.target() != nullptr && e.target()->kind != ExprKind::This) return std::nullopt;
    std::vector<const TypeDecl*> chain = {test_.owner};
    for (const TypeDecl* s : model_.supertypes_of(*test_.owner)) {
      if (s->origin == java::SourceTag::Test) chain.push_back(s);
    }
    for (const TypeDecl* t : chain) {
      for (const auto& m : t->methods) {
        if (m.is_constructor || !m.body || m.name != e.text || m.params.size() != e.args().size()) continue;
        if (java::is_test_method(*t, m, model_)) continue;
        return std::make_pair(t, &m);
      }
    }
    return std::nullopt;
  }

  // Helpers past the depth limit or already on the frame stack are treated
  // as ordinary calls.
  bool can_inline(const MethodDecl& helper) {
    const bool cycle = std::any_of(frames_.begin(), frames_.end(), [&](const Frame& f) { return f.method == &helper; });
    if (cycle || static_cast<int>(frames_.size()) > options_.inline_depth) {
      diagnose("helper " + helper.name + (cycle ? " is recursive" : " exceeds the inline depth") + "; not inlined");
      return false;
    }
    return true;
  }

  Eval inline_helper(const Expr& e, const TypeDecl& owner, const MethodDecl& helper,
                     const std::optional<std::string>& hint) {
    std::vector<Value> args;
    for (const auto& a : e.args()) args.push_back(eval(a, std::nullopt, true).value);
    frames_.push_back(Frame{scope_for_method(model_, owner, helper), {}, &helper, {}, hint});
    for (std::size_t i = 0; i < helper.params.size(); ++i) frame().vars[helper.params[i].name] = args[i];
    stmts(*helper.body);
    Eval result = frame().ret.value_or(Eval{});
    frames_.pop_back();
    return result;
  }

  bool is_type_target(const Expr& target) {
    if (target.kind != ExprKind::Name && target.kind != ExprKind::FieldAccess) return false;
    if (target.kind == ExprKind::Name && frame().vars.count(target.text)) return false;
    return frame().scope.type_of(target).is_type_name;
  }

  std::string adopt(const Expr* target, const Value& receiver) {
    if (receiver.object) return *receiver.object;
    if (target != nullptr && target->kind == ExprKind::Name) {
      auto it = frame().vars.find(target->text);
      if (it != frame().vars.end() || !frame().scope.type_of(*target).is_type_name) {
        Value& slot = frame().vars[target->text];
        slot.object = fresh_id(target->text);
        return *slot.object;
      }
    }
    return fresh_id(target != nullptr ? java::render(*target) : "this");
  }

  FactSet read_facts(const std::string& object, const std::set<std::string>& attributes, int site) {
    FactSet out;
    for (const auto& a : attributes) out.insert(OutcomeFact::unversioned(object, a, OutcomeFact::Pending::Read, site));
    return out;
  }

  Eval call(const Expr& e, const std::optional<std::string>& hint, bool used) {
    if (e.kind == ExprKind::Call && java::is_assertion_call(e, {})) {
      for (const auto& a : e.args()) eval(a, std::nullopt, true);
      return {};
    }
    if (auto helper = find_helper(e); helper && can_inline(*helper->second)) {
      return inline_helper(e, *helper->first, *helper->second, hint);
    }

    const Expr* target = e.target();
    const bool static_target = target != nullptr && is_type_target(*target);
    Eval receiver;
    if (target != nullptr && !static_target) receiver = eval(*target, std::nullopt, true);
    std::vector<Eval> args;
    for (const auto& a : e.args()) args.push_back(eval(a, std::nullopt, true));

    Resolution resolution = frame().scope.resolve(e, used);
    const Classification& cls = cache_.classify(resolution, test_.cut.value_or(""));
    const auto* resolved = std::get_if<ResolvedMethod>(&resolution);
    const bool is_static_call = e.kind == ExprKind::New || static_target ||
                                (resolved != nullptr && resolved->method != nullptr && resolved->method->is_static);

    CallRecord rec;
    rec.index = next_index_++;
    rec.call = to_call_expr(e, hint);
    rec.stereotype = cls.stereotype;
    rec.method = cls.method;
    rec.declaring_type = cls.declaring_type;
    rec.rationale = cls.rationale_branch;
    rec.overload_tie = resolved != nullptr && resolved->arity_tie;

    Value value;
    switch (cls.stereotype) {
      case Stereotype::Creational: {
        std::string id = fresh_id(hint.value_or("new " + std::string(java::simple_name_of(cls.declaring_type))));
        rec.outcome.insert(OutcomeFact::returned(id, id));
        for (const auto& f : cls.initialized) {
          rec.outcome.insert(OutcomeFact::unversioned(id, f, OutcomeFact::Pending::Init, rec.index));
          attributes_[id].insert(f);
        }
        value.object = id;
        value.facts = {OutcomeFact::returned(id, id)};
        rec.verifies = rec.outcome;
        break;
      }
      case Stereotype::Mutator: {
        std::string owner = is_static_call ? std::string(java::simple_name_of(cls.declaring_type))
                                           : adopt(target, receiver.value);
        for (const auto& f : cls.effects.writes) {
          rec.outcome.insert(OutcomeFact::unversioned(owner, f, OutcomeFact::Pending::Write, rec.index));
          attributes_[owner].insert(f);
        }
        for (const auto& [index, fields] : cls.effects.param_writes) {
          if (index >= args.size()) continue;
          const Expr& arg = e.args()[index];
          std::string arg_owner = adopt(&arg, args[index].value);
          for (const auto& f : fields) {
            rec.outcome.insert(OutcomeFact::unversioned(arg_owner, f, OutcomeFact::Pending::Write, rec.index));
            attributes_[arg_owner].insert(f);
          }
        }
        if (used) {
          std::string id = fresh_id(hint.value_or(e.text + "()"));
          rec.outcome.insert(OutcomeFact::returned(id, hint.value_or(e.text + "()")));
          value.facts = {OutcomeFact::returned(id, hint.value_or(e.text + "()"))};
        }
        rec.verifies = rec.outcome;
        break;
      }
      case Stereotype::Get: {
        const std::string attr = cls.effects.returns_field.value_or("");
        if (is_static_call) {
          value.facts = read_facts(std::string(java::simple_name_of(cls.declaring_type)), {attr}, rec.index);
        } else if (receiver.value.object) {
          value.facts = read_facts(*receiver.value.object, {attr}, rec.index);
        } else {
          value.facts = receiver.value.facts;
        }
        rec.verifies = value.facts;
        break;
      }
      case Stereotype::ExternalProducer: {
        if (is_static_call || target == nullptr) {
          for (const auto& a : args) merge_into(value.facts, a.value.facts);
        } else if (receiver.value.object) {
          std::set<std::string> attrs = cls.effects.reads;
          if (attrs.empty()) attrs = attributes_[*receiver.value.object];
          value.facts = attrs.empty() ? receiver.value.facts : read_facts(*receiver.value.object, attrs, rec.index);
        } else {
          value.facts = receiver.value.facts;
        }
        rec.verifies = value.facts;
        break;
      }
      case Stereotype::InternalProducer: {
        std::string name = hint.value_or(e.text + "()");
        OutcomeFact fact = OutcomeFact::returned(fresh_id(name), name);
        rec.outcome = {fact};
        rec.verifies = {fact};
        value.facts = {fact};
        break;
      }
      case Stereotype::Unknown:
        break;
    }

    Eval out{value, rec.verifies};
    if (current_assert_ != nullptr) {
      current_assert_->nested.push_back(std::move(rec));
    } else {
      records_.push_back(std::move(rec));
    }
    return out;
  }

  const java::TestCase& test_;
  const java::CodeModel& model_;
  const FlowOptions& options_;
  StereotypeCache& cache_;
  std::vector<std::string>* diagnostics_;

  std::vector<Frame> frames_;
  std::vector<Record> records_;
  AssertRecord* current_assert_ = nullptr;
  int next_index_ = 0;
  std::set<std::string> used_ids_;
  // Attributes known to exist on each tracked object.
  std::map<std::string, std::set<std::string>> attributes_;
};

template <typename F>
void for_each_call(std::vector<Record>& records, F&& fn) {
  for (auto& r : records) {
    if (auto* c = std::get_if<CallRecord>(&r)) {
      fn(*c);
    } else {
      for (auto& n : std::get<AssertRecord>(r).nested) fn(n);
    }
  }
}

}  // namespace

std::vector<Record> linearize(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                              StereotypeCache& cache, std::vector<std::string>* diagnostics) {
  return Linearizer(test, model, options, cache, diagnostics).run();
}

std::vector<Record> version_attributes(std::vector<Record> records, std::vector<std::string>* diagnostics) {
  using Key = std::pair<std::string, std::string>;
  std::map<Key, std::vector<int>> writes;
  std::map<Key, std::vector<int>> inits;
  for_each_call(records, [&](const CallRecord& c) {
    for (const auto& f : c.outcome) {
      if (f.pending == OutcomeFact::Pending::Write) writes[{f.owner, f.name}].push_back(f.site);
      if (f.pending == OutcomeFact::Pending::Init) inits[{f.owner, f.name}].push_back(f.site);
    }
  });
  auto count_before = [](const std::map<Key, std::vector<int>>& m, const Key& k, int site) {
    auto it = m.find(k);
    if (it == m.end()) return 0;
    return static_cast<int>(std::count_if(it->second.begin(), it->second.end(), [&](int s) { return s < site; }));
  };
  std::set<std::string> reported;
  auto fix = [&](const FactSet& facts) {
    FactSet out;
    for (OutcomeFact f : facts) {
      if (f.pending != OutcomeFact::Pending::None) {
        Key k{f.owner, f.name};
        int prior = count_before(writes, k, f.site);
        switch (f.pending) {
          case OutcomeFact::Pending::Init:
            f.version = 0;
            break;
          case OutcomeFact::Pending::Write:
            f.version = prior + 1;
            break;
          case OutcomeFact::Pending::Read:
            f.version = prior;
            if (prior == 0 && count_before(inits, k, f.site) == 0 && diagnostics != nullptr &&
                reported.insert(f.owner + "." + f.name).second) {
              diagnostics->push_back("attribute " + f.owner + "." + f.name +
                                     " read before any write; version 0 synthesized");
            }
            break;
          case OutcomeFact::Pending::None:
            break;
        }
        f.pending = OutcomeFact::Pending::None;
        f.site = -1;
      }
      out.insert(std::move(f));
    }
    return out;
  };
  for (auto& r : records) {
    if (auto* a = std::get_if<AssertRecord>(&r)) a->verified = fix(a->verified);
  }
  for_each_call(records, [&](CallRecord& c) {
    c.outcome = fix(c.outcome);
    c.verifies = fix(c.verifies);
  });
  return records;
}

std::vector<const CallRecord*> call_records(const std::vector<Record>& records) {
  std::vector<const CallRecord*> out;
  for (const auto& r : records) {
    if (const auto* c = std::get_if<CallRecord>(&r)) {
      out.push_back(c);
    } else {
      for (const auto& n : std::get<AssertRecord>(r).nested) out.push_back(&n);
    }
  }
  std::sort(out.begin(), out.end(), [](const CallRecord* a, const CallRecord* b) { return a->index < b->index; });
  return out;
}

std::vector<FactSet> collect_meth_outcomes(const std::vector<Record>& records) {
  std::vector<FactSet> out;
  for (const CallRecord* c : call_records(records)) out.push_back(c->outcome);
  return out;
}

VerifiedInfo collect_verified_info(const std::vector<Record>& records) {
  VerifiedInfo out;
  for (const auto& r : records) {
    if (const auto* a = std::get_if<AssertRecord>(&r)) {
      out.per_assert.push_back(a->verified);
      merge_into(out.all, a->verified);
    }
  }
  return out;
}

LinearizedTest analyze_flow(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                            StereotypeCache& cache) {
  LinearizedTest out;
  out.records = version_attributes(linearize(test, model, options, cache, &out.diagnostics), &out.diagnostics);
  out.meth_outcomes = collect_meth_outcomes(out.records);
  VerifiedInfo info = collect_verified_info(out.records);
  out.verified_per_assert = std::move(info.per_assert);
  out.verified_union = std::move(info.all);
  for (const auto& r : out.records) {
    if (const auto* a = std::get_if<AssertRecord>(&r)) out.exceptional_path |= a->exceptional;
  }
  return out;
}

nlohmann::json LinearizedTest::to_json() const {
  nlohmann::json records_json = nlohmann::json::array();
  auto call_json = [](const CallRecord& c) {
    nlohmann::json j;
    j["index"] = c.index;
    j["kind"] = "call";
    j["callee"] = c.call.callee_name;
    j["line"] = c.call.line;
    j["method"] = c.method;
    j["stereotype"] = to_string(c.stereotype);
    j["rationale"] = c.rationale;
    j["outcome"] = render_facts(c.outcome);
    if (c.overload_tie) j["overload_tie"] = true;
    return j;
  };
  for (const auto& r : records) {
    if (const auto* c = std::get_if<CallRecord>(&r)) {
      records_json.push_back(call_json(*c));
      continue;
    }
    const auto& a = std::get<AssertRecord>(r);
    nlohmann::json j;
    j["index"] = a.index;
    j["kind"] = "assert";
    j["line"] = a.statement.span.begin;
    nlohmann::json nested = nlohmann::json::array();
    for (const auto& n : a.nested) nested.push_back(call_json(n));
    j["nested"] = nested;
    j["verified"] = render_facts(a.verified);
    if (a.exceptional) j["exceptional"] = true;
    records_json.push_back(j);
  }
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : meth_outcomes) outcomes.push_back(render_facts(o));
  nlohmann::json per_assert = nlohmann::json::array();
  for (const auto& v : verified_per_assert) per_assert.push_back(render_facts(v));
  nlohmann::json j;
  j["records"] = records_json;
  j["meth_outcomes"] = outcomes;
  j["verified_per_assert"] = per_assert;
  j["verified_info"] = render_facts(verified_union);
  if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
  return j;
}

}  // namespace eagertest
