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

#include "submod/random.h"

#include <limits>

namespace submod {

std::size_t UniformIndex(Rng& rng, std::size_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t b = bound;
  // 2^64 mod b.
  const std::uint64_t threshold = (0 - b) % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return static_cast<std::size_t>(x % b);
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  return SplitMix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace submod
