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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eagertest/verdict.hpp"

namespace eagertest {

// Rows: detector A eager / not-eager; columns: detector B.
struct ContingencyTable {
  long long n11 = 0;
  long long n10 = 0;
  long long n01 = 0;
  long long n00 = 0;

  long long n() const { return n11 + n10 + n01 + n00; }
};

// Pairs where either verdict is not-applicable are skipped.
ContingencyTable tabulate(const std::vector<VerdictResult>& a, const std::vector<VerdictResult>& b);

// Undefined for an empty table, and when chance agreement is 1 but observed
// agreement is not.
std::optional<double> cohen_kappa(const ContingencyTable& t);

// Landis and Koch bands with closed upper bounds.
std::string landis_koch_band(std::optional<double> kappa);

struct AgreementCell {
  std::optional<double> kappa;
  std::string band;
  long long n = 0;
};

struct AgreementMatrix {
  std::vector<std::string> detectors;
  // cells[i][j] compares detectors[i] with detectors[j].
  std::vector<std::vector<AgreementCell>> cells;
};

// All verdict lists must be indexed by the same test cases.
AgreementMatrix build_matrix(const std::vector<std::pair<std::string, std::vector<VerdictResult>>>& verdicts);

}  // namespace eagertest
