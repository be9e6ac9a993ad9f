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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "json.hpp"
#include "eagertest/resolver.hpp"

namespace eagertest {

enum class Stereotype { Creational, Mutator, Get, InternalProducer, ExternalProducer, Unknown };

std::string_view to_string(Stereotype s);

struct FieldEffect {
  std::set<std::string> reads;
  std::set<std::string> writes;
  // Fields of argument objects written through parameter `index`.
  std::map<std::size_t, std::set<std::string>> param_writes;
  std::optional<std::string> returns_field;
  bool has_return_value = false;
  // A same-type call chain was cut off at the depth limit or a cycle.
  bool approximate = false;

  bool operator==(const FieldEffect&) const = default;
};

inline constexpr int kDefaultEffectDepth = 2;

// Reads and writes of the declaring type's own (or inherited) fields,
// following calls on the same object up to `depth` levels.
FieldEffect field_effects(const ResolvedMethod& method, const java::CodeModel& model,
                          int depth = kDefaultEffectDepth);

// Fields a constructor leaves initialized: constructor writes (through
// this(...)/super(...)) plus fields with initializers. The implicit default
// constructor initializes every declared instance field.
std::set<std::string> initialized_fields(const ResolvedMethod& ctor, const java::CodeModel& model,
                                         int depth = kDefaultEffectDepth);

// True for names that conventionally mutate a receiver collection or bean
// (add, put, clear, setX, ...).
bool is_mutating_verb(std::string_view name);

struct Classification {
  Stereotype stereotype = Stereotype::Unknown;
  std::string method;
  std::string declaring_type;
  FieldEffect effects;
  // Creational only.
  std::set<std::string> initialized;
  std::string rationale_branch;
  std::optional<std::string> diagnostic;

  nlohmann::json to_json() const;
};

Classification classify_method(const Resolution& method, std::string_view cut, const java::CodeModel& model,
                               int effect_depth = kDefaultEffectDepth);

// Per-run memo over classify_method. Not thread-safe; use one per worker.
class StereotypeCache {
 public:
  StereotypeCache(const java::CodeModel& model, int effect_depth) : model_(&model), depth_(effect_depth) {}
  const Classification& classify(const Resolution& method, std::string_view cut);

 private:
  using Key = std::tuple<const void*, const void*, bool, std::string, std::string, bool>;
  const java::CodeModel* model_;
  int depth_;
  std::map<Key, Classification> memo_;
};

}  // namespace eagertest
