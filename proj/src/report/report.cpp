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

#include "eagertest/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "eagertest/heuristic.hpp"
#include "eagertest/java/code_model.hpp"
#include "eagertest/java/test_cases.hpp"
#include "eagertest/rules.hpp"

namespace eagertest {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Markdown:
      return "markdown";
  }
  return "json";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (test_roots.empty()) throw ConfigError("at least one test root is required");
  if (detectors.empty()) throw ConfigError("at least one detector is required");
  if (inline_depth < 0) throw ConfigError("inline depth must be >= 0");
  if (effect_depth < 0) throw ConfigError("effect depth must be >= 0");
}

void DetectorRegistry::add(std::string name, DetectorFn fn) {
  if (fns_.count(name)) throw std::invalid_argument("detector registered twice: " + name);
  names_.push_back(name);
  fns_.emplace(std::move(name), std::move(fn));
}

const DetectorFn* DetectorRegistry::find(std::string_view name) const {
  auto it = fns_.find(name);
  return it == fns_.end() ? nullptr : &it->second;
}

std::optional<std::string> DetectorRegistry::canonical(std::string_view name) const {
  auto fold = [](std::string_view s) {
    std::string out;
    for (char c : s) out.push_back(c == '.' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  };
  for (const auto& n : names_) {
    if (fold(n) == fold(name)) return n;
  }
  return std::nullopt;
}

const DetectorRegistry& default_registry() {
  static const DetectorRegistry registry = [] {
    DetectorRegistry r;
    r.add(std::string(kHeuristicDetector), [](const java::TestCase& t, DetectorContext& ctx) {
      return run_heuristic(t, ctx.model, ctx.flow, ctx.cache);
    });
    for (RuleId rule : kAllRules) {
      r.add(std::string(to_string(rule)), [rule](const java::TestCase& t, DetectorContext& ctx) {
        return apply_rule(rule, t, ctx.model, ctx.cache);
      });
    }
    return r;
  }();
  return registry;
}

namespace {

const char* const kBandConvention =
    "kappa < 0 poor/no agreement; <= 0.20 slight; <= 0.40 fair; <= 0.60 moderate; <= 0.80 substantial; "
    "<= 1.00 almost perfect";

ordered_json to_ordered(const json& j) { return ordered_json::parse(j.dump()); }

json to_plain(const ordered_json& j) { return json::parse(j.dump()); }

ordered_json kappa_json(const std::optional<double>& k) { return k ? ordered_json(*k) : ordered_json(nullptr); }

std::string format_kappa(double k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", k);
  return buf;
}

}  // namespace

ReportDoc run_analysis(const RunConfig& config, const DetectorRegistry& registry) {
  config.validate();
  std::vector<std::string> detectors;
  for (const auto& d : config.detectors) {
    auto name = registry.canonical(d);
    if (!name) throw ConfigError("unknown detector: " + d);
    if (std::find(detectors.begin(), detectors.end(), *name) == detectors.end()) detectors.push_back(*name);
  }

  std::vector<java::SourceRoot> roots;
  for (const auto& p : config.production_roots) roots.push_back({p, java::SourceTag::Production});
  for (const auto& p : config.test_roots) roots.push_back({p, java::SourceTag::Test});
  const java::CodeModel model = java::parse_sources(roots);

  std::vector<java::TestCase> tests = java::extract_test_cases(model);
  std::stable_sort(tests.begin(), tests.end(), [](const java::TestCase& a, const java::TestCase& b) {
    return std::tie(a.file(), a.method->name, a.owning_class()) < std::tie(b.file(), b.method->name, b.owning_class());
  });

  ReportDoc report;
  report.detectors = detectors;
  report.include_evidence = config.verbose_evidence;
  report.config_echo["test_roots"] = config.test_roots;
  report.config_echo["production_roots"] = config.production_roots;
  report.config_echo["detectors"] = detectors;
  report.config_echo["inline_depth"] = config.inline_depth;
  report.config_echo["effect_depth"] = config.effect_depth;
  report.config_echo["format"] = to_string(config.format);
  report.config_echo["verbose_evidence"] = config.verbose_evidence;
  report.config_echo["production_scope"] = "types under production roots";
  report.config_echo["kappa_bands"] = kBandConvention;

  for (const auto& d : model.diagnostics()) {
    report.diagnostics.push_back(d.file + ":" + std::to_string(d.line) + ": " + d.message);
  }

  StereotypeCache cache(model, config.effect_depth);
  DetectorContext ctx{model, FlowOptions{config.inline_depth, config.effect_depth}, cache};
  for (const auto& t : tests) {
    TestRow row;
    row.id = test_id_of(t);
    row.cut = t.cut;
    for (const auto& name : detectors) {
      Verdict v = (*registry.find(name))(t, ctx);
      v.detector = name;
      v.test = row.id;
      if (!config.verbose_evidence) v.evidence.erase("trace");
      row.verdicts.emplace(name, std::move(v));
    }
    report.rows.push_back(std::move(row));
  }
  finalize(report);
  return report;
}

std::vector<AgreementEntry> agreement_entries(const AgreementMatrix& matrix) {
  std::vector<AgreementEntry> out;
  for (std::size_t i = 0; i < matrix.detectors.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix.detectors.size(); ++j) {
      const AgreementCell& c = matrix.cells[i][j];
      out.push_back({matrix.detectors[i], matrix.detectors[j], c.kappa, c.band, c.n});
    }
  }
  return out;
}

void finalize(ReportDoc& report) {
  report.summary.clear();
  std::vector<std::pair<std::string, std::vector<VerdictResult>>> columns;
  for (const auto& d : report.detectors) {
    DetectorSummary s;
    std::vector<VerdictResult> column;
    for (const auto& row : report.rows) {
      auto it = row.verdicts.find(d);
      VerdictResult r = it == row.verdicts.end() ? VerdictResult::NotApplicable : it->second.result;
      column.push_back(r);
      (r == VerdictResult::Eager ? s.eager : r == VerdictResult::NotEager ? s.not_eager : s.not_applicable) += 1;
    }
    if (s.eager + s.not_eager > 0) {
      s.pct_eager = 100.0 * static_cast<double>(s.eager) / static_cast<double>(s.eager + s.not_eager);
    }
    report.summary[d] = s;
    columns.emplace_back(d, std::move(column));
  }
  report.agreement.clear();
  if (columns.size() >= 2) report.agreement = agreement_entries(build_matrix(columns));
}

ordered_json to_json(const ReportDoc& report) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config_echo"] = report.config_echo;
  ordered_json tests = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json t;
    t["id"] = {{"file", row.id.file}, {"class", row.id.cls}, {"method", row.id.method}};
    t["cut"] = row.cut ? ordered_json(*row.cut) : ordered_json(nullptr);
    ordered_json verdicts = ordered_json::object();
    for (const auto& d : report.detectors) {
      auto it = row.verdicts.find(d);
      if (it == row.verdicts.end()) continue;
      ordered_json v;
      v["result"] = to_string(it->second.result);
      v["flags"] = it->second.flags;
      if (!it->second.evidence.empty()) v["evidence"] = to_ordered(it->second.evidence);
      verdicts[d] = std::move(v);
    }
    t["verdicts"] = std::move(verdicts);
    tests.push_back(std::move(t));
  }
  doc["tests"] = std::move(tests);
  ordered_json summary = ordered_json::object();
  for (const auto& d : report.detectors) {
    const DetectorSummary& s = report.summary.at(d);
    summary[d] = {{"eager", s.eager},
                  {"not_eager", s.not_eager},
                  {"not_applicable", s.not_applicable},
                  {"pct_eager", s.pct_eager ? ordered_json(*s.pct_eager) : ordered_json(nullptr)}};
  }
  doc["summary"] = std::move(summary);
  ordered_json agreement = ordered_json::array();
  for (const auto& a : report.agreement) {
    agreement.push_back({{"a", a.a}, {"b", a.b}, {"kappa", kappa_json(a.kappa)}, {"band", a.band}, {"n", a.n}});
  }
  doc["agreement"] = std::move(agreement);
  doc["diagnostics"] = report.diagnostics;
  return doc;
}

namespace {

void expect(std::vector<std::string>& errors, bool ok, const std::string& what) {
  if (!ok) errors.push_back(what);
}

bool is_count(const json& j) { return j.is_number_integer() && j.get<long long>() >= 0; }

}  // namespace

std::vector<std::string> validate_report_json(const json& doc) {
  std::vector<std::string> errors;
  if (!doc.is_object()) return {"document is not an object"};
  for (const char* key : {"schema_version", "config_echo", "tests", "summary", "agreement"}) {
    expect(errors, doc.contains(key), std::string("missing key ") + key);
  }
  if (!errors.empty()) return errors;
  expect(errors, doc["schema_version"] == kSchemaVersion, "unsupported schema_version");
  expect(errors, doc["config_echo"].is_object(), "config_echo is not an object");
  expect(errors, doc["summary"].is_object(), "summary is not an object");
  expect(errors, doc["agreement"].is_array(), "agreement is not an array");
  expect(errors, doc["tests"].is_array(), "tests is not an array");
  if (doc.contains("diagnostics")) expect(errors, doc["diagnostics"].is_array(), "diagnostics is not an array");
  if (!errors.empty()) return errors;

  for (std::size_t i = 0; i < doc["tests"].size(); ++i) {
    const json& t = doc["tests"][i];
    const std::string at = "tests[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("id") || !t["id"].is_object() || !t.contains("verdicts") ||
        !t["verdicts"].is_object()) {
      errors.push_back(at + " needs id and verdicts objects");
      continue;
    }
    for (const char* key : {"file", "class", "method"}) {
      expect(errors, t["id"].contains(key) && t["id"][key].is_string(), at + ".id." + key + " must be a string");
    }
    if (t.contains("cut")) expect(errors, t["cut"].is_string() || t["cut"].is_null(), at + ".cut must be string or null");
    for (const auto& [name, _] : doc["summary"].items()) {
      expect(errors, t["verdicts"].contains(name), at + " has no verdict for " + name);
    }
    for (const auto& [name, v] : t["verdicts"].items()) {
      const std::string vat = at + ".verdicts." + name;
      if (!v.is_object()) {
        errors.push_back(vat + " is not an object");
        continue;
      }
      expect(errors, v.contains("result") && v["result"].is_string() &&
                         parse_verdict_result(v["result"].get<std::string>()).has_value(),
             vat + ".result is not a verdict");
      expect(errors, v.contains("flags") && v["flags"].is_array() &&
                         std::all_of(v["flags"].begin(), v["flags"].end(), [](const json& f) { return f.is_string(); }),
             vat + ".flags must be an array of strings");
      if (v.contains("evidence")) expect(errors, v["evidence"].is_object(), vat + ".evidence is not an object");
    }
  }
  for (const auto& [name, s] : doc["summary"].items()) {
    const std::string at = "summary." + name;
    if (!s.is_object()) {
      errors.push_back(at + " is not an object");
      continue;
    }
    for (const char* key : {"eager", "not_eager", "not_applicable"}) {
      expect(errors, s.contains(key) && is_count(s[key]), at + "." + key + " must be a count");
    }
    expect(errors, s.contains("pct_eager") && (s["pct_eager"].is_number() || s["pct_eager"].is_null()),
           at + ".pct_eager must be a number or null");
  }
  for (std::size_t i = 0; i < doc["agreement"].size(); ++i) {
    const json& a = doc["agreement"][i];
    const std::string at = "agreement[" + std::to_string(i) + "]";
    if (!a.is_object()) {
      errors.push_back(at + " is not an object");
      continue;
    }
    expect(errors, a.contains("a") && a["a"].is_string() && a.contains("b") && a["b"].is_string(),
           at + " needs detector names a and b");
    expect(errors, a.contains("kappa") && (a["kappa"].is_number() || a["kappa"].is_null()),
           at + ".kappa must be a number or null");
    expect(errors, a.contains("band") && a["band"].is_string(), at + ".band must be a string");
    expect(errors, a.contains("n") && is_count(a["n"]), at + ".n must be a count");
  }
  return errors;
}

ReportDoc report_from_json(const ordered_json& doc) {
  auto errors = validate_report_json(to_plain(doc));
  if (!errors.empty()) throw std::invalid_argument("invalid report: " + errors.front());
  ReportDoc report;
  report.config_echo = doc["config_echo"];
  if (report.config_echo.contains("detectors") && report.config_echo["detectors"].is_array()) {
    report.detectors = report.config_echo["detectors"].get<std::vector<std::string>>();
  } else {
    for (const auto& [name, _] : doc["summary"].items()) report.detectors.push_back(name);
  }
  if (report.config_echo.contains("verbose_evidence") && report.config_echo["verbose_evidence"].is_boolean()) {
    report.include_evidence = report.config_echo["verbose_evidence"].get<bool>();
  }
  for (const ordered_json& t : doc["tests"]) {
    TestRow row;
    row.id = TestId{t["id"]["file"], t["id"]["class"], t["id"]["method"]};
    if (t.contains("cut") && t["cut"].is_string()) row.cut = t["cut"].get<std::string>();
    for (const auto& [name, v] : t["verdicts"].items()) {
      Verdict verdict;
      verdict.test = row.id;
      verdict.detector = name;
      verdict.result = *parse_verdict_result(v["result"].get<std::string>());
      verdict.flags = v["flags"].get<std::set<std::string>>();
      if (v.contains("evidence")) verdict.evidence = to_plain(v["evidence"]);
      row.verdicts.emplace(name, std::move(verdict));
    }
    report.rows.push_back(std::move(row));
  }
  if (doc.contains("diagnostics")) report.diagnostics = doc["diagnostics"].get<std::vector<std::string>>();
  finalize(report);
  return report;
}

bool ReportDoc::operator==(const ReportDoc& other) const { return to_json(*this) == to_json(other); }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const ReportDoc& report) {
  std::ostringstream out;
  out << "file,class,method";
  for (const auto& d : report.detectors) out << "," << csv_field(d);
  out << "\n";
  for (const auto& row : report.rows) {
    out << csv_field(row.id.file) << "," << csv_field(row.id.cls) << "," << csv_field(row.id.method);
    for (const auto& d : report.detectors) {
      auto it = row.verdicts.find(d);
      out << "," << (it == row.verdicts.end() ? "" : std::string(to_string(it->second.result)));
    }
    out << "\n";
  }
  return out.str();
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_md(const ReportDoc& report) {
  std::ostringstream out;
  out << "# Eager test report\n\n";
  out << "| Test |";
  for (const auto& d : report.detectors) out << " " << d << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < report.detectors.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : report.rows) {
    out << "| `" << md_escape(std::string(java::simple_name_of(row.id.cls)) + "." + row.id.method) << "` |";
    for (const auto& d : report.detectors) {
      auto it = row.verdicts.find(d);
      if (it == row.verdicts.end()) {
        out << " |";
        continue;
      }
      out << " " << to_string(it->second.result);
      if (!it->second.flags.empty()) {
        std::string flags;
        for (const auto& f : it->second.flags) flags += (flags.empty() ? "" : ", ") + f;
        out << " (" << md_escape(flags) << ")";
      }
      out << " |";
    }
    out << "\n";
  }

  out << "\n## Summary\n\n| Detector | eager | not-eager | not-applicable | % eager |\n|---|---|---|---|---|\n";
  for (const auto& d : report.detectors) {
    const DetectorSummary& s = report.summary.at(d);
    char pct[32] = "n/a";
    if (s.pct_eager) std::snprintf(pct, sizeof pct, "%.1f", *s.pct_eager);
    out << "| " << d << " | " << s.eager << " | " << s.not_eager << " | " << s.not_applicable << " | " << pct
        << " |\n";
  }
  if (report.detectors.size() >= 2) {
    std::vector<long long> applicable;
    for (const auto& d : report.detectors) {
      applicable.push_back(report.summary.at(d).eager + report.summary.at(d).not_eager);
    }
    out << "\n## Agreement (Cohen's kappa)\n\n" << render_markdown_matrix(report.detectors, applicable, report.agreement);
  }
  if (!report.diagnostics.empty()) {
    out << "\n## Diagnostics\n\n";
    for (const auto& d : report.diagnostics) out << "- " << md_escape(d) << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_markdown_matrix(const std::vector<std::string>& detectors, const std::vector<long long>& applicable,
                                   const std::vector<AgreementEntry>& agreement) {
  std::ostringstream out;
  out << "| |";
  for (const auto& d : detectors) out << " " << d << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < detectors.size(); ++i) out << "---|";
  out << "\n";
  for (std::size_t i = 0; i < detectors.size(); ++i) {
    out << "| " << detectors[i] << " |";
    for (std::size_t j = 0; j < detectors.size(); ++j) {
      if (j < i) {
        out << " |";
        continue;
      }
      if (j == i) {
        out << (i < applicable.size() && applicable[i] > 0 ? " 1 |" : " undefined |");
        continue;
      }
      auto it = std::find_if(agreement.begin(), agreement.end(), [&](const AgreementEntry& a) {
        return a.a == detectors[i] && a.b == detectors[j];
      });
      if (it == agreement.end()) {
        out << " |";
      } else if (!it->kappa) {
        out << " undefined (n=" << it->n << ") |";
      } else {
        out << " " << format_kappa(*it->kappa) << " (" << it->band << ") |";
      }
    }
    out << "\n";
  }
  out << "\nBands: " << kBandConvention << ".\n";
  return out.str();
}

std::string render(const ReportDoc& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc = to_json(report);
      auto errors = validate_report_json(to_plain(doc));
      if (!errors.empty()) throw std::logic_error("report failed schema validation: " + errors.front());
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return render_csv(report);
    case OutputFormat::Markdown:
      return render_md(report);
  }
  return {};
}

AgreementDoc combine_reports(const std::vector<std::pair<std::string, ReportDoc>>& inputs) {
  AgreementDoc doc;
  std::set<TestId> ids;
  for (const auto& [path, report] : inputs) {
    doc.inputs.push_back(path);
    for (const auto& row : report.rows) ids.insert(row.id);
  }
  doc.n_tests = static_cast<long long>(ids.size());

  std::vector<std::pair<std::string, std::vector<VerdictResult>>> columns;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const ReportDoc& report = inputs[k].second;
    std::map<TestId, const TestRow*> by_id;
    for (const auto& row : report.rows) by_id[row.id] = &row;
    for (const auto& d : report.detectors) {
      std::string name = d;
      if (std::find(doc.detectors.begin(), doc.detectors.end(), name) != doc.detectors.end()) {
        name += "@" + std::to_string(k + 1);
      }
      std::vector<VerdictResult> column;
      for (const auto& id : ids) {
        auto row = by_id.find(id);
        VerdictResult r = VerdictResult::NotApplicable;
        if (row != by_id.end()) {
          auto v = row->second->verdicts.find(d);
          if (v != row->second->verdicts.end()) r = v->second.result;
        }
        column.push_back(r);
      }
      doc.applicable.push_back(std::count_if(column.begin(), column.end(),
                                             [](VerdictResult r) { return r != VerdictResult::NotApplicable; }));
      doc.detectors.push_back(name);
      columns.emplace_back(name, std::move(column));
    }
  }
  if (columns.size() >= 2) doc.agreement = agreement_entries(build_matrix(columns));
  return doc;
}

ordered_json to_json(const AgreementDoc& doc) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["inputs"] = doc.inputs;
  out["detectors"] = doc.detectors;
  out["n_tests"] = doc.n_tests;
  out["kappa_bands"] = kBandConvention;
  ordered_json agreement = ordered_json::array();
  for (const auto& a : doc.agreement) {
    agreement.push_back({{"a", a.a}, {"b", a.b}, {"kappa", kappa_json(a.kappa)}, {"band", a.band}, {"n", a.n}});
  }
  out["agreement"] = std::move(agreement);
  return out;
}

std::string render(const AgreementDoc& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return to_json(doc).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "a,b,kappa,band,n\n";
      for (const auto& a : doc.agreement) {
        out << csv_field(a.a) << "," << csv_field(a.b) << "," << (a.kappa ? format_kappa(*a.kappa) : "") << ","
            << csv_field(a.band) << "," << a.n << "\n";
      }
      return out.str();
    }
    case OutputFormat::Markdown:
      return "# Detector agreement\n\n" + std::to_string(doc.n_tests) + " test cases.\n\n" +
             render_markdown_matrix(doc.detectors, doc.applicable, doc.agreement);
  }
  return {};
}

void write_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  out.close();
  if (!out) throw IoError("failed writing output file: " + path);
}

void emit(const ReportDoc& report, OutputFormat format, const std::string& path) {
  write_text(render(report, format), path);
}

}  // namespace eagertest
