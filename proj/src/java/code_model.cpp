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

#include "eagertest/java/code_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "eagertest/java/test_cases.hpp"

namespace eagertest::java {

namespace fs = std::filesystem;

CodeModel::CodeModel(std::vector<TypeDecl> types, std::vector<SourceRoot> roots,
                     std::vector<Diagnostic> diagnostics)
    : roots_(std::move(roots)), diagnostics_(std::move(diagnostics)) {
  for (auto& t : types) {
    if (by_qualified_.count(t.qualified_name)) {
      diagnostics_.push_back({t.file, t.span.begin, "duplicate type " + t.qualified_name + " ignored"});
      continue;
    }
    by_qualified_.emplace(t.qualified_name, types_.size());
    by_simple_[t.simple_name].push_back(types_.size());
    types_.push_back(std::move(t));
  }
  for (auto& t : types_) {
    for (auto& super : t.supertypes) {
      std::string erased = erase_generics(super);
      if (const TypeDecl* resolved = resolve_type(erased, &t)) {
        super = resolved->qualified_name;
      } else {
        super = erased;
      }
    }
  }
  for (auto& t : types_) {
    t.is_test_class = std::any_of(t.methods.begin(), t.methods.end(),
                                  [&](const MethodDecl& m) { return is_test_method(t, m, *this); });
  }
}

const TypeDecl* CodeModel::find(std::string_view qualified_name) const {
  auto it = by_qualified_.find(std::string(qualified_name));
  return it == by_qualified_.end() ? nullptr : &types_[it->second];
}

const TypeDecl* CodeModel::resolve_type(std::string_view name, const TypeDecl* context) const {
  if (name.empty()) return nullptr;
  if (const TypeDecl* t = find(name)) return t;

  auto dot = name.find('.');
  if (dot != std::string_view::npos) {
    // Outer.Inner written relative to the context.
    const TypeDecl* head = resolve_type(name.substr(0, dot), context);
    if (head == nullptr) return nullptr;
    return find(head->qualified_name + std::string(name.substr(dot)));
  }

  const std::string simple(name);
  for (const TypeDecl* c = context; c != nullptr; c = c->enclosing.empty() ? nullptr : find(c->enclosing)) {
    if (const TypeDecl* t = find(c->qualified_name + "." + simple)) return t;
  }
  if (context != nullptr) {
    if (!context->package_name.empty()) {
      if (const TypeDecl* t = find(context->package_name + "." + simple)) return t;
    }
    for (const auto& imp : context->imports) {
      if (simple_name_of(imp) == simple) {
        if (const TypeDecl* t = find(imp)) return t;
      }
    }
    for (const auto& imp : context->imports) {
      if (imp.size() > 2 && imp.ends_with(".*")) {
        if (const TypeDecl* t = find(imp.substr(0, imp.size() - 2) + "." + simple)) return t;
      }
    }
  }
  auto it = by_simple_.find(simple);
  if (it != by_simple_.end() && it->second.size() == 1) return &types_[it->second.front()];
  return nullptr;
}

std::vector<const TypeDecl*> CodeModel::supertypes_of(const TypeDecl& type) const {
  std::vector<const TypeDecl*> out;
  std::vector<const TypeDecl*> frontier = {&type};
  std::unordered_set<const TypeDecl*> seen = {&type};
  while (!frontier.empty()) {
    std::vector<const TypeDecl*> next;
    for (const TypeDecl* t : frontier) {
      for (const auto& s : t->supertypes) {
        const TypeDecl* st = find(s);
        if (st != nullptr && seen.insert(st).second) {
          out.push_back(st);
          next.push_back(st);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool CodeModel::is_subtype_of(const TypeDecl& type, std::string_view ancestor) const {
  if (type.qualified_name == ancestor) return true;
  auto supers = supertypes_of(type);
  return std::any_of(supers.begin(), supers.end(),
                     [&](const TypeDecl* s) { return s->qualified_name == ancestor; });
}

namespace {

std::vector<fs::path> java_files_under(const SourceRoot& root) {
  std::error_code ec;
  fs::path base(root.path);
  if (!fs::exists(base, ec)) throw SourceError("source root does not exist: " + root.path);
  std::vector<fs::path> files;
  if (fs::is_regular_file(base, ec)) {
    files.push_back(base);
    return files;
  }
  if (!fs::is_directory(base, ec)) throw SourceError("source root is not a directory: " + root.path);
  fs::recursive_directory_iterator it(base, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw SourceError("cannot read source root " + root.path + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".java") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });
  return files;
}

void parse_one(const std::string& file, std::string_view text, SourceTag tag, const ParseOptions& options,
               std::vector<TypeDecl>& types, std::vector<Diagnostic>& diagnostics) {
  try {
    CompilationUnit unit = parse_compilation_unit(text, file, options);
    for (auto& t : unit.types) {
      t.origin = tag;
      types.push_back(std::move(t));
    }
  } catch (const ParseError& e) {
    diagnostics.push_back({file, e.line(), std::string("syntax error, file skipped: ") + e.what()});
  }
}

}  // namespace

CodeModel parse_sources(const std::vector<SourceRoot>& roots, const ParseOptions& options) {
  std::vector<TypeDecl> types;
  std::vector<Diagnostic> diagnostics;
  for (const auto& root : roots) {
    for (const auto& path : java_files_under(root)) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        diagnostics.push_back({path.generic_string(), 0, "cannot open file, skipped"});
        continue;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      parse_one(path.generic_string(), buffer.str(), root.tag, options, types, diagnostics);
    }
  }
  return CodeModel(std::move(types), roots, std::move(diagnostics));
}

CodeModel parse_strings(const std::vector<InMemorySource>& sources, const ParseOptions& options) {
  std::vector<TypeDecl> types;
  std::vector<Diagnostic> diagnostics;
  for (const auto& s : sources) parse_one(s.file, s.text, s.tag, options, types, diagnostics);
  return CodeModel(std::move(types), {}, std::move(diagnostics));
}

}  // namespace eagertest::java
