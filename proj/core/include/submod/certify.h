// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMOD_CERTIFY_H_
#define SUBMOD_CERTIFY_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace submod {

// The acceptance property suites, runnable from the CLI (`certify`) and the
// acceptance test binary. Each suite checks one property at a pinned
// tolerance and reports a single pass/fail.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CertifyOptions {
  std::uint64_t seed = 0x5eed2024;
  // Reduced instance counts for a fast smoke run. Not a substitute for the
  // full suite.
  bool quick = false;
  // Progress lines, if set.
  std::ostream* log = nullptr;
};

// 1..12
std::vector<int> AllCriteria();
std::string CriterionTitle(int id);
// Throws InputError for an unknown id.
CriterionResult RunCriterion(int id, const CertifyOptions& options);

// "[PASS] 3  <title>  (<seconds>s)  <detail>"
std::string FormatResult(const CriterionResult& result);

}  // namespace submod

#endif  // SUBMOD_CERTIFY_H_
