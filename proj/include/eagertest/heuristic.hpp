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

#include "eagertest/flow.hpp"
#include "eagertest/verdict.hpp"

namespace eagertest {

inline constexpr std::string_view kHeuristicDetector = "heuristic";

// Step 3: counts the calls whose non-empty outcome covers all verified
// information. One covering call means the test checks a single call.
Verdict detect_eager(const LinearizedTest& test);

// Full pipeline for one test case; not-applicable when the CUT is unresolved.
Verdict run_heuristic(const java::TestCase& test, const java::CodeModel& model, const FlowOptions& options,
                      StereotypeCache& cache);

TestId test_id_of(const java::TestCase& test);

}  // namespace eagertest
