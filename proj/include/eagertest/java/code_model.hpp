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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eagertest/java/ast.hpp"
#include "eagertest/java/parser.hpp"

namespace eagertest::java {

struct SourceRoot {
  std::string path;
  SourceTag tag = SourceTag::Production;
  bool operator==(const SourceRoot&) const = default;
};

struct Diagnostic {
  std::string file;
  int line = 0;
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};

// Hard failure reading a source root.
class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsed view of production and test sources. Immutable once built; the
// lookup index is rebuilt by the constructor.
class CodeModel {
 public:
  CodeModel() = default;
  CodeModel(std::vector<TypeDecl> types, std::vector<SourceRoot> roots,
            std::vector<Diagnostic> diagnostics);

  const std::vector<TypeDecl>& types() const { return types_; }
  const std::vector<SourceRoot>& source_roots() const { return roots_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  const TypeDecl* find(std::string_view qualified_name) const;

  // Resolves a type name as written inside `context` (nested types, same
  // package, imports, then a unique simple-name match). Generic arguments
  // and array suffixes must already be stripped.
  const TypeDecl* resolve_type(std::string_view name, const TypeDecl* context) const;

  // Supertypes of `type` that have source in the model, nearest first.
  std::vector<const TypeDecl*> supertypes_of(const TypeDecl& type) const;

  bool is_subtype_of(const TypeDecl& type, std::string_view ancestor_qualified) const;

  // Structural equality over types and roots; diagnostics are ignored.
  bool operator==(const CodeModel& other) const {
    return types_ == other.types_ && roots_ == other.roots_;
  }

 private:
  std::vector<TypeDecl> types_;
  std::vector<SourceRoot> roots_;
  std::vector<Diagnostic> diagnostics_;
  std::unordered_map<std::string, std::size_t> by_qualified_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_simple_;
};

// Parses every .java file below each root. Files are visited in sorted path
// order. Unparseable files become diagnostics; a missing or unreadable root
// throws SourceError.
CodeModel parse_sources(const std::vector<SourceRoot>& roots, const ParseOptions& options = {});

// Builds a model from in-memory sources, mainly for tests. Each entry is
// (file name, source text, tag).
struct InMemorySource {
  std::string file;
  std::string text;
  SourceTag tag = SourceTag::Production;
};
CodeModel parse_strings(const std::vector<InMemorySource>& sources, const ParseOptions& options = {});

}  // namespace eagertest::java
