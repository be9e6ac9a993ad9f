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

#include "eagertest/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eagertest/java/code_model.hpp"
#include "eagertest/report.hpp"

namespace eagertest {
namespace {

struct Output {
  std::ostream& out;
  void write(const std::string& text, const std::string& path) {
    if (path == "-") {
      out << text;
      out.flush();
    } else {
      write_text(text, path);
    }
  }
};

int analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ReportDoc report = run_analysis(config);
  for (const auto& d : report.diagnostics) err << "warning: " << d << "\n";
  Output{out}.write(render(report, config.format), config.out_path);
  if (report.rows.empty()) {
    err << "warning: no test cases found\n";
    return kExitNoTests;
  }
  return kExitOk;
}

int agree(const std::vector<std::string>& paths, OutputFormat format, const std::string& out_path,
          std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, ReportDoc>> inputs;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << "error: cannot read verdict file " << path << "\n";
      return kExitFatal;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
      err << "error: " << path << " is not valid JSON\n";
      return kExitFatal;
    }
    try {
      inputs.emplace_back(path, report_from_json(doc));
    } catch (const std::invalid_argument& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      return kExitFatal;
    }
  }
  AgreementDoc result = combine_reports(inputs);
  Output{out}.write(render(result, format), out_path);
  if (result.n_tests == 0) {
    err << "warning: verdict files contain no test cases\n";
    return kExitNoTests;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detects eager tests in Java unit test suites.", "eagertest"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::vector<std::string> detectors = default_registry().names();
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Run detectors over test and production sources");
  analyze_cmd->add_option("--tests", config.test_roots, "Test source roots")->required()->expected(1, -1);
  analyze_cmd->add_option("--src", config.production_roots, "Production source roots")->expected(1, -1);
  analyze_cmd->add_option("--detectors", detectors, "Detectors to run (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  analyze_cmd->add_option("--format", format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}))
      ->capture_default_str();
  analyze_cmd->add_option("--out", config.out_path, "Output path, - for stdout")->capture_default_str();
  analyze_cmd->add_option("--inline-depth", config.inline_depth, "Helper inlining depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  analyze_cmd->add_option("--effect-depth", config.effect_depth, "Call depth for field effects")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  analyze_cmd->add_flag("--verbose-evidence", config.verbose_evidence, "Include full flow traces");

  std::vector<std::string> verdict_files;
  std::string agree_format = "json";
  std::string agree_out = "-";
  CLI::App* agree_cmd = app.add_subcommand("agree", "Cohen's kappa between detectors in saved JSON reports");
  agree_cmd->add_option("--verdicts", verdict_files, "JSON reports from analyze")->required()->expected(1, -1);
  agree_cmd->add_option("--format", agree_format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}))
      ->capture_default_str();
  agree_cmd->add_option("--out", agree_out, "Output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      config.detectors = detectors;
      config.format = *parse_format(format);
      return analyze(config, out, err);
    }
    return agree(verdict_files, *parse_format(agree_format), agree_out, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const java::SourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFatal;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFatal;
  }
}

}  // namespace eagertest
