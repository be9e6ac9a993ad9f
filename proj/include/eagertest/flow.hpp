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

// Linearized view of one test case: call and assertion records in execution
// order, with versioned attribute facts for outcome and verification sets.

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "eagertest/stereotypes.hpp"

namespace eagertest {

enum class FactKind { Attribute, Returned };

struct OutcomeFact {
  // How an unversioned attribute fact binds; None once versioned.
  enum class Pending { None, Init, Write, Read };

  FactKind kind = FactKind::Returned;
  std::string owner;
  std::string name;
  std::optional<int> version;
  Pending pending = Pending::None;
  // Record index the pending fact binds at.
  int site = -1;

  static OutcomeFact returned(std::string owner, std::string name);
  static OutcomeFact attribute(std::string owner, std::string name, int version);
  static OutcomeFact unversioned(std::string owner, std::string name, Pending role, int site);

  std::string render() const;
  auto operator<=>(const OutcomeFact&) const = default;
};

using FactSet = std::set<OutcomeFact>;

struct CallRecord {
  int index = -1;
  java::CallExpr call;
  Stereotype stereotype = Stereotype::Unknown;
  // MethOutcome of this call.
  FactSet outcome;
  // What the call contributes when an assertion checks its result.
  FactSet verifies;
  std::string method;
  std::string declaring_type;
  std::string rationale;
  // Several overloads matched by arity; the best argument-type match won.
  bool overload_tie = false;
};

struct AssertRecord {
  int index = -1;
  java::Stmt statement;
  // Calls evaluated while computing the assertion's arguments.
  std::vector<CallRecord> nested;
  FactSet verified;
  bool exceptional = false;
};

using Record = std::variant<CallRecord, AssertRecord>;

struct FlowOptions {
  int inline_depth = 2;
  int effect_depth = kDefaultEffectDepth;
};

// Requires a resolved CUT. Diagnostics (inlining limits, unknown names) are
// appended to `diagnostics` when given.
std::vector<Record> linearize(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                              StereotypeCache& cache, std::vector<std::string>* diagnostics = nullptr);

// Replaces pending attribute facts with versions: a creation writes v0, each
// later write bumps the version, and a read binds the highest version written
// by an earlier record.
std::vector<Record> version_attributes(std::vector<Record> records,
                                       std::vector<std::string>* diagnostics = nullptr);

// Every call record in index order, nested ones included.
std::vector<const CallRecord*> call_records(const std::vector<Record>& records);

std::vector<FactSet> collect_meth_outcomes(const std::vector<Record>& records);

struct VerifiedInfo {
  std::vector<FactSet> per_assert;
  FactSet all;
};
VerifiedInfo collect_verified_info(const std::vector<Record>& records);

struct LinearizedTest {
  std::vector<Record> records;
  std::vector<FactSet> meth_outcomes;
  std::vector<FactSet> verified_per_assert;
  FactSet verified_union;
  std::vector<std::string> diagnostics;
  bool exceptional_path = false;

  std::size_t assert_count() const { return verified_per_assert.size(); }
  nlohmann::json to_json() const;
};

// linearize + version_attributes + both collections.
LinearizedTest analyze_flow(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                            StereotypeCache& cache);

std::vector<std::string> render_facts(const FactSet& facts);

}  // namespace eagertest
