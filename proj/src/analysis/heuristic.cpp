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

#include <algorithm>

namespace eagertest {

std::string_view to_string(VerdictResult r) {
  switch (r) {
    case VerdictResult::Eager:
      return "eager";
    case VerdictResult::NotEager:
      return "not-eager";
    case VerdictResult::NotApplicable:
      return "not-applicable";
  }
  return "not-applicable";
}

std::optional<VerdictResult> parse_verdict_result(std::string_view text) {
  for (auto r : {VerdictResult::Eager, VerdictResult::NotEager, VerdictResult::NotApplicable}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

TestId test_id_of(const java::TestCase& test) {
  return TestId{test.file(), test.owning_class(), test.method->name};
}

Verdict detect_eager(const LinearizedTest& test) {
  Verdict v;
  v.detector = std::string(kHeuristicDetector);
  const auto calls = call_records(test.records);

  nlohmann::json outcomes = nlohmann::json::array();
  std::vector<int> covering;
  for (const CallRecord* c : calls) {
    bool covers = !c->outcome.empty() && !test.verified_union.empty() &&
                  std::includes(c->outcome.begin(), c->outcome.end(), test.verified_union.begin(),
                                test.verified_union.end());
    if (covers) covering.push_back(c->index);
    outcomes.push_back({{"call", c->index},
                        {"callee", c->call.callee_name},
                        {"stereotype", to_string(c->stereotype)},
                        {"facts", render_facts(c->outcome)}});
  }
  nlohmann::json per_assert = nlohmann::json::array();
  for (const auto& s : test.verified_per_assert) per_assert.push_back(render_facts(s));

  const int count = static_cast<int>(covering.size());
  if (test.verified_union.empty()) {
    v.result = VerdictResult::NotEager;
    v.flags.insert(test.assert_count() == 0 ? "no-assertions" : "empty-verified-info");
  } else if (count == 1) {
    v.result = VerdictResult::NotEager;
  } else {
    v.result = VerdictResult::Eager;
    if (count >= 2) v.flags.insert("ambiguous-coverage");
  }
  if (test.exceptional_path) v.flags.insert("exceptional-path");

  v.evidence["meth_outcomes"] = outcomes;
  v.evidence["verified_per_assert"] = per_assert;
  v.evidence["verified_info"] = render_facts(test.verified_union);
  v.evidence["containment_count"] = count;
  v.evidence["covering_calls"] = covering;
  v.evidence["step3"] = "eager unless exactly one non-empty call outcome contains all verified information";
  return v;
}

Verdict run_heuristic(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                      StereotypeCache& cache) {
  if (!test.cut) {
    Verdict v;
    v.test = test_id_of(test);
    v.detector = std::string(kHeuristicDetector);
    v.flags.insert("unresolved-cut");
    v.evidence["cut"] = test.cut_basis;
    return v;
  }
  LinearizedTest flow = analyze_flow(test, model, options, cache);
  Verdict v = detect_eager(flow);
  v.test = test_id_of(test);
  v.evidence["cut"] = *test.cut;
  v.evidence["trace"] = flow.to_json();
  return v;
}

}  // namespace eagertest
