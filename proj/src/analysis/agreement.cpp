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

#include "eagertest/agreement.hpp"

#include <algorithm>
#include <stdexcept>

namespace eagertest {

ContingencyTable tabulate(const std::vector<VerdictResult>& a, const std::vector<VerdictResult>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("verdict lists differ in length");
  ContingencyTable t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == VerdictResult::NotApplicable || b[i] == VerdictResult::NotApplicable) continue;
    const bool ea = a[i] == VerdictResult::Eager;
    const bool eb = b[i] == VerdictResult::Eager;
    (ea ? (eb ? t.n11 : t.n10) : (eb ? t.n01 : t.n00)) += 1;
  }
  return t;
}

std::optional<double> cohen_kappa(const ContingencyTable& t) {
  const long long n = t.n();
  if (n == 0) return std::nullopt;
  // Sum of marginal products; p_e = chance / n^2.
  const long long chance = (t.n11 + t.n10) * (t.n11 + t.n01) + (t.n01 + t.n00) * (t.n10 + t.n00);
  const long long agree = t.n11 + t.n00;
  if (chance == n * n) {
    if (agree == n) return 1.0;
    return std::nullopt;
  }
  return static_cast<double>(n * agree - chance) / static_cast<double>(n * n - chance);
}

std::string landis_koch_band(std::optional<double> kappa) {
  if (!kappa) return "undefined";
  const double k = *kappa;
  if (k < 0.0) return "poor/no agreement";
  if (k <= 0.20) return "slight";
  if (k <= 0.40) return "fair";
  if (k <= 0.60) return "moderate";
  if (k <= 0.80) return "substantial";
  return "almost perfect";
}

AgreementMatrix build_matrix(const std::vector<std::pair<std::string, std::vector<VerdictResult>>>& verdicts) {
  AgreementMatrix m;
  const std::size_t d = verdicts.size();
  for (const auto& [name, _] : verdicts) m.detectors.push_back(name);
  m.cells.assign(d, std::vector<AgreementCell>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const auto& vi = verdicts[i].second;
    const long long applicable = std::count_if(vi.begin(), vi.end(), [](VerdictResult r) {
      return r != VerdictResult::NotApplicable;
    });
    AgreementCell diag;
    diag.n = applicable;
    if (applicable > 0) diag.kappa = 1.0;
    diag.band = landis_koch_band(diag.kappa);
    m.cells[i][i] = diag;
    for (std::size_t j = i + 1; j < d; ++j) {
      ContingencyTable t = tabulate(vi, verdicts[j].second);
      AgreementCell cell;
      cell.n = t.n();
      cell.kappa = cohen_kappa(t);
      cell.band = landis_koch_band(cell.kappa);
      m.cells[i][j] = cell;
      m.cells[j][i] = cell;
    }
  }
  return m;
}

}  // namespace eagertest
