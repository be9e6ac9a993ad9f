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

#include <gtest/gtest.h>

#include <random>

namespace eagertest {
namespace {

constexpr auto E = VerdictResult::Eager;
constexpr auto N = VerdictResult::NotEager;
constexpr auto X = VerdictResult::NotApplicable;

// Observed and chance agreement from per-category proportions.
double kappa_oracle(double n11, double n10, double n01, double n00) {
  const double n = n11 + n10 + n01 + n00;
  const double po = (n11 + n00) / n;
  const double a_yes = (n11 + n10) / n;
  const double b_yes = (n11 + n01) / n;
  const double pe = a_yes * b_yes + (1 - a_yes) * (1 - b_yes);
  return (po - pe) / (1 - pe);
}

TEST(KappaTest, PerfectAgreement) {
  auto k = cohen_kappa({30, 0, 0, 70});
  ASSERT_TRUE(k);
  EXPECT_EQ(*k, 1.0);
}

TEST(KappaTest, MatchesOracle) {
  auto k = cohen_kappa({20, 5, 15, 60});
  ASSERT_TRUE(k);
  EXPECT_NEAR(*k, kappa_oracle(20, 5, 15, 60), 1e-12);
  EXPECT_NEAR(*k, 9.0 / 17.0, 1e-12);
}

TEST(KappaTest, OppositeRaters) {
  auto k = cohen_kappa({0, 12, 0, 0});
  ASSERT_TRUE(k);
  EXPECT_LE(*k, 0.0);
  auto k2 = cohen_kappa({0, 6, 6, 0});
  ASSERT_TRUE(k2);
  EXPECT_EQ(*k2, -1.0);
}

TEST(KappaTest, Undefined) {
  EXPECT_FALSE(cohen_kappa({}).has_value());
  // Both raters constant and agreeing: chance agreement 1, observed 1.
  EXPECT_EQ(cohen_kappa({0, 0, 0, 9}), 1.0);
}

TEST(KappaTest, RandomTablesAgainstOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cell(0, 40);
  for (int i = 0; i < 500; ++i) {
    ContingencyTable t{cell(rng), cell(rng), cell(rng), cell(rng)};
    auto k = cohen_kappa(t);
    if (t.n() == 0) {
      EXPECT_FALSE(k);
      continue;
    }
    ASSERT_TRUE(k);
    EXPECT_LE(*k, 1.0);
    const double oracle = kappa_oracle(t.n11, t.n10, t.n01, t.n00);
    if (std::isfinite(oracle)) EXPECT_NEAR(*k, oracle, 1e-12);
    ContingencyTable swapped{t.n11, t.n01, t.n10, t.n00};
    EXPECT_EQ(cohen_kappa(swapped), k);
  }
}

TEST(BandTest, Thresholds) {
  EXPECT_EQ(landis_koch_band(0.4751), "moderate");
  EXPECT_EQ(landis_koch_band(-0.1), "poor/no agreement");
  EXPECT_EQ(landis_koch_band(0.0), "slight");
  EXPECT_EQ(landis_koch_band(0.20), "slight");
  EXPECT_EQ(landis_koch_band(0.21), "fair");
  EXPECT_EQ(landis_koch_band(0.40), "fair");
  EXPECT_EQ(landis_koch_band(0.60), "moderate");
  EXPECT_EQ(landis_koch_band(0.80), "substantial");
  EXPECT_EQ(landis_koch_band(0.81), "almost perfect");
  EXPECT_EQ(landis_koch_band(1.0), "almost perfect");
  EXPECT_EQ(landis_koch_band(std::nullopt), "undefined");
}

TEST(BandTest, Monotone) {
  const std::vector<std::string> order = {"poor/no agreement", "slight", "fair", "moderate", "substantial",
                                          "almost perfect"};
  auto rank = [&](double k) {
    return std::find(order.begin(), order.end(), landis_koch_band(k)) - order.begin();
  };
  long prev = 0;
  for (int i = -100; i <= 100; ++i) {
    long r = rank(i / 100.0);
    EXPECT_GE(r, prev);
    EXPECT_LT(r, 6);
    prev = r;
  }
}

TEST(TabulateTest, SkipsNotApplicable) {
  auto t = tabulate({E, E, N, N, X}, {E, N, E, X, E});
  EXPECT_EQ(t.n11, 1);
  EXPECT_EQ(t.n10, 1);
  EXPECT_EQ(t.n01, 1);
  EXPECT_EQ(t.n00, 0);
  EXPECT_THROW(tabulate({E}, {E, N}), std::invalid_argument);
}

TEST(MatrixTest, IdenticalDetectors) {
  std::vector<VerdictResult> v = {E, N, E, N, N, E, E, N, N, N};
  auto m = build_matrix({{"a", v}, {"b", v}});
  EXPECT_EQ(m.cells[0][1].kappa, 1.0);
  EXPECT_EQ(m.cells[0][1].n, 10);
}

TEST(MatrixTest, SymmetricAndExcludesNotApplicable) {
  auto m = build_matrix({{"a", {E, N, E, X}}, {"b", {E, E, N, N}}, {"c", {N, N, X, E}}});
  ASSERT_EQ(m.cells.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(m.cells[i][j].kappa, m.cells[j][i].kappa);
      EXPECT_EQ(m.cells[i][j].n, m.cells[j][i].n);
    }
  }
  EXPECT_EQ(m.cells[0][1].n, 3);
  EXPECT_EQ(m.cells[0][2].n, 2);
  EXPECT_EQ(m.cells[1][2].n, 3);
  EXPECT_EQ(m.cells[0][0].n, 3);
}

TEST(MatrixTest, NoApplicableVerdicts) {
  auto m = build_matrix({{"a", {X, X}}, {"b", {E, N}}});
  EXPECT_FALSE(m.cells[0][0].kappa);
  EXPECT_EQ(m.cells[0][0].band, "undefined");
  EXPECT_FALSE(m.cells[0][1].kappa);
  EXPECT_EQ(m.cells[0][1].n, 0);
}

}  // namespace
}  // namespace eagertest
