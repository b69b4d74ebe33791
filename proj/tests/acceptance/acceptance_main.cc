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

// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any selected criterion fails.
//
//   acceptance [--only 3,5] [--quick] [--seed N]

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "submod/certify.h"

int main(int argc, char** argv) {
  submod::CertifyOptions options;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") {
      options.quick = true;
    } else if (arg == "--verbose") {
      options.log = &std::cerr;
    } else if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::stoull(argv[++i], nullptr, 0);
    } else {
      std::cerr << "usage: acceptance [--only ids] [--quick] [--seed N] "
                   "[--verbose]\n";
      return 2;
    }
  }
  if (ids.empty()) ids = submod::AllCriteria();

  int failed = 0;
  for (int id : ids) {
    const submod::CriterionResult r = submod::RunCriterion(id, options);
    std::cout << submod::FormatResult(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
