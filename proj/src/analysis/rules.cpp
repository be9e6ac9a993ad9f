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

#include "eagertest/rules.hpp"

#include <cctype>
#include <map>

#include "eagertest/heuristic.hpp"

namespace eagertest {

using java::Expr;
using java::ExprKind;
using java::Stmt;
using java::StmtKind;

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::DR1:
      return "DR1";
    case RuleId::DR2_1:
      return "DR2_1";
    case RuleId::DR2_2:
      return "DR2_2";
    case RuleId::DR2_3:
      return "DR2_3";
    case RuleId::DR3:
      return "DR3";
    case RuleId::DR4:
      return "DR4";
  }
  return "DR1";
}

std::optional<RuleId> parse_rule(std::string_view text) {
  // Accepts "DR2_1", "DR2.1" and lower case.
  std::string norm;
  for (char c : text) norm.push_back(c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (RuleId r : kAllRules) {
    if (to_string(r) == norm) return r;
  }
  return std::nullopt;
}

bool has_accessor_name(std::string_view name) {
  for (std::string_view p : {"get", "is", "has"}) {
    if (name.size() > p.size() && name.starts_with(p) && std::isupper(static_cast<unsigned char>(name[p.size()]))) {
      return true;
    }
  }
  return false;
}

CallCounts count_calls(const java::TestCase& test, const java::CodeModel& model) {
  CallCounts counts;
  if (!test.method->body) return counts;
  TypeScope scope = scope_for_method(model, *test.owner, *test.method);
  const java::TypeDecl* cut = test.cut ? model.find(*test.cut) : nullptr;
  java::walk_exprs(*test.method->body, [&](const Expr& e) {
    if (e.kind != ExprKind::Call) return;
    Resolution r = scope.resolve(e, true);
    const auto* m = std::get_if<ResolvedMethod>(&r);
    if (m == nullptr || m->is_constructor || m->method == nullptr) return;
    if (m->declaring->origin == java::SourceTag::Production) ++counts.production_calls;
    if (cut != nullptr && (m->declaring == cut || model.is_subtype_of(*cut, m->declaring->qualified_name))) {
      ++counts.cut_calls;
    }
  });
  return counts;
}

int count_cycles(const std::vector<Stmt>& body) {
  std::vector<const Stmt*> flat;
  java::flatten(body, flat);
  int cycles = 0;
  bool pending_setup = false;
  bool in_asserts = false;
  for (const Stmt* s : flat) {
    if (s->kind == StmtKind::AssertCall) {
      if (pending_setup && !in_asserts) ++cycles;
      in_asserts = true;
      pending_setup = false;
    } else {
      pending_setup = true;
      in_asserts = false;
    }
  }
  return cycles;
}

namespace {

const Expr* strip_casts(const Expr& e) {
  const Expr* v = &e;
  while (v->kind == ExprKind::Cast) v = &v->operands[0];
  return v;
}

class GetTracker {
 public:
  GetTracker(const java::TestCase& test, const java::CodeModel& model, StereotypeCache& cache)
      : test_(test), scope_(scope_for_method(model, *test.owner, *test.method)), cache_(cache) {}

  bool is_get_call(const Expr& e) {
    if (e.kind != ExprKind::Call) return false;
    Resolution r = scope_.resolve(e, true);
    if (cache_.classify(r, test_.cut.value_or("")).stereotype == Stereotype::Get) return true;
    if (!has_accessor_name(e.text)) return false;
    const auto* m = std::get_if<ResolvedMethod>(&r);
    return m == nullptr || m->method == nullptr || m->method->return_type != "void";
  }

  void bind(const std::string& var, const Expr& value) {
    const Expr* v = strip_casts(value);
    bound_to_get_[var] = is_get_call(*v);
  }

  bool involves_get(const Expr& e) {
    bool found = false;
    java::walk_exprs(e, [&](const Expr& sub) {
      if (found) return;
      if (sub.kind == ExprKind::Name) {
        auto it = bound_to_get_.find(sub.text);
        found = it != bound_to_get_.end() && it->second;
      } else {
        found = is_get_call(sub);
      }
    });
    return found;
  }

 private:
  const java::TestCase& test_;
  TypeScope scope_;
  StereotypeCache& cache_;
  std::map<std::string, bool> bound_to_get_;
};

}  // namespace

Verdict apply_rule(RuleId rule, const java::TestCase& test, const java::CodeModel& model, StereotypeCache& cache) {
  Verdict v;
  v.test = test_id_of(test);
  v.detector = std::string(to_string(rule));
  const std::vector<Stmt> empty;
  const std::vector<Stmt>& body = test.method->body ? *test.method->body : empty;

  switch (rule) {
    case RuleId::DR1:
    case RuleId::DR2_1:
    case RuleId::DR2_2: {
      if (!test.cut) {
        v.flags.insert("unresolved-cut");
        v.evidence["cut"] = test.cut_basis;
        return v;
      }
      const int threshold = rule == RuleId::DR1 ? 2 : rule == RuleId::DR2_1 ? 3 : 5;
      const CallCounts counts = count_calls(test, model);
      v.result = counts.cut_calls >= threshold ? VerdictResult::Eager : VerdictResult::NotEager;
      v.evidence["cut"] = *test.cut;
      v.evidence["cut_calls"] = counts.cut_calls;
      v.evidence["threshold"] = threshold;
      return v;
    }
    case RuleId::DR2_3: {
      const CallCounts counts = count_calls(test, model);
      v.result = counts.production_calls >= 5 ? VerdictResult::Eager : VerdictResult::NotEager;
      v.evidence["production_calls"] = counts.production_calls;
      v.evidence["threshold"] = 5;
      return v;
    }
    case RuleId::DR3: {
      const int cycles = count_cycles(body);
      v.result = cycles >= 2 ? VerdictResult::Eager : VerdictResult::NotEager;
      v.evidence["cycles"] = cycles;
      return v;
    }
    case RuleId::DR4: {
      std::vector<const Stmt*> flat;
      java::flatten(body, flat);
      GetTracker tracker(test, model, cache);
      int asserts = 0;
      int without_get = 0;
      for (const Stmt* s : flat) {
        if (s->kind == StmtKind::AssertCall) {
          ++asserts;
          bool uses_get = false;
          for (const auto& a : s->exprs.front().args()) uses_get = uses_get || tracker.involves_get(a);
          if (!uses_get) ++without_get;
        } else if (s->assigned_var && !s->exprs.empty()) {
          const Expr& e = s->exprs.front();
          tracker.bind(*s->assigned_var, e.kind == ExprKind::Assign ? e.operands[1] : e);
        }
      }
      v.result = asserts >= 2 && without_get >= 1 ? VerdictResult::Eager : VerdictResult::NotEager;
      v.evidence["asserts"] = asserts;
      v.evidence["asserts_without_get"] = without_get;
      return v;
    }
  }
  return v;
}

}  // namespace eagertest
