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

#ifndef SUBMOD_RANDOM_H_
#define SUBMOD_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace submod {

// All randomness in the library flows through a 64-bit Mersenne Twister
// (std::mt19937_64, whose output sequence is fixed by the C++ standard) and
// the two helpers below, so a seed reproduces a run on any conforming
// toolchain.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection: draws are discarded while
// below 2^64 mod bound, the survivor is reduced modulo bound.
std::size_t UniformIndex(Rng& rng, std::size_t bound);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double UniformUnit(Rng& rng);

// SplitMix64 finalizer.
std::uint64_t SplitMix64(std::uint64_t x);

// Seed of trial `index` under `master`:
// SplitMix64(master + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

}  // namespace submod

#endif  // SUBMOD_RANDOM_H_
