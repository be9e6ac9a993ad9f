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

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eagertest/agreement.hpp"
#include "eagertest/flow.hpp"
#include "eagertest/verdict.hpp"
#include "json.hpp"

namespace eagertest {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Csv, Markdown };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(std::string_view text);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> test_roots;
  std::vector<std::string> production_roots;
  // Registry names, in the order columns are reported.
  std::vector<std::string> detectors;
  int inline_depth = 2;
  int effect_depth = kDefaultEffectDepth;
  OutputFormat format = OutputFormat::Json;
  std::string out_path = "-";
  bool verbose_evidence = false;

  // Throws ConfigError.
  void validate() const;
};

// Shared per-run state handed to every detector.
struct DetectorContext {
  const java::CodeModel& model;
  FlowOptions flow;
  StereotypeCache& cache;
};

using DetectorFn = std::function<Verdict(const java::TestCase&, DetectorContext&)>;

class DetectorRegistry {
 public:
  void add(std::string name, DetectorFn fn);
  const DetectorFn* find(std::string_view name) const;
  // Canonical name for user input such as "dr2.1", or nullopt.
  std::optional<std::string> canonical(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, DetectorFn, std::less<>> fns_;
};

// heuristic, DR1, DR2_1, DR2_2, DR2_3, DR3, DR4.
const DetectorRegistry& default_registry();

struct TestRow {
  TestId id;
  std::optional<std::string> cut;
  std::map<std::string, Verdict> verdicts;
};

struct DetectorSummary {
  long long eager = 0;
  long long not_eager = 0;
  long long not_applicable = 0;
  // Over applicable verdicts, in percent; nullopt when there are none.
  std::optional<double> pct_eager;
};

struct AgreementEntry {
  std::string a;
  std::string b;
  std::optional<double> kappa;
  std::string band;
  long long n = 0;
};

struct ReportDoc {
  nlohmann::ordered_json config_echo = nlohmann::ordered_json::object();
  std::vector<std::string> detectors;
  std::vector<TestRow> rows;
  std::map<std::string, DetectorSummary> summary;
  // Upper triangle in detector order; empty for fewer than two detectors.
  std::vector<AgreementEntry> agreement;
  std::vector<std::string> diagnostics;
  bool include_evidence = false;

  bool operator==(const ReportDoc& other) const;
};

// Throws ConfigError, java::SourceError.
ReportDoc run_analysis(const RunConfig& config, const DetectorRegistry& registry = default_registry());

// Fills summary and agreement from rows.
void finalize(ReportDoc& report);

std::vector<AgreementEntry> agreement_entries(const AgreementMatrix& matrix);

nlohmann::ordered_json to_json(const ReportDoc& report);
// Throws std::invalid_argument when the document fails validation.
ReportDoc report_from_json(const nlohmann::ordered_json& doc);
// Empty when the document matches the report schema.
std::vector<std::string> validate_report_json(const nlohmann::json& doc);

std::string render(const ReportDoc& report, OutputFormat format);
// `applicable[i]` counts applicable verdicts of detectors[i]; the diagonal
// is undefined for a detector without any.
std::string render_markdown_matrix(const std::vector<std::string>& detectors, const std::vector<long long>& applicable,
                                   const std::vector<AgreementEntry>& agreement);

// Agreement over verdict files from earlier runs. Tests are matched by id;
// a test missing from one input counts as not-applicable for its detectors.
struct AgreementDoc {
  std::vector<std::string> inputs;
  std::vector<std::string> detectors;
  long long n_tests = 0;
  std::vector<long long> applicable;
  std::vector<AgreementEntry> agreement;
};

// Detector names repeated across inputs are suffixed with "@<input number>".
AgreementDoc combine_reports(const std::vector<std::pair<std::string, ReportDoc>>& inputs);
nlohmann::ordered_json to_json(const AgreementDoc& doc);
std::string render(const AgreementDoc& doc, OutputFormat format);

// "-" writes to stdout. Throws IoError.
void emit(const ReportDoc& report, OutputFormat format, const std::string& path);
void write_text(const std::string& text, const std::string& path);

}  // namespace eagertest
