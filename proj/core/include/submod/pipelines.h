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

#ifndef SUBMOD_PIPELINES_H_
#define SUBMOD_PIPELINES_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "submod/element_set.h"
#include "submod/matroid.h"
#include "submod/oracle.h"
#include "submod/trial_record.h"

namespace submod {

inline constexpr double kSizeSwitchTime = 0.372;
inline constexpr double kMatroidSwitchTime = 0.559;
inline constexpr double kNearlyLinearSwitchTime = 0.3;

// ceil(10 / (9 eps)), the number of interpolation rounds.
std::size_t InterpolationRounds(double eps);
// ceil(10 / (3 eps)): rounds of the guidance-set search.
std::size_t GuidanceSearchRounds(double eps);
// ceil(5 / eps): rounds of the guided solution phase.
std::size_t GuidedPhaseRounds(double eps);

struct PipelineParams {
  double eps = 0.1;
  double t = kSizeSwitchTime;
  // Round counts; 0 derives them from eps.
  std::size_t ell = 0;
  std::size_t ell1 = 0;
  std::size_t ell2 = 0;
  // Keep only the best `pool_cap` sets per tree level (0: no cap). A capped
  // run is flagged as not certified.
  std::size_t pool_cap = 0;
  // A tree level larger than this raises ResourceError.
  std::size_t max_level_size = std::size_t{1} << 20;
};

struct PipelineResult {
  // Real elements only, cached value set.
  ElementSet solution;
  // The local-search output (or the guidance pool's best, for the
  // nearly linear pipeline).
  ElementSet guide;
  // Number of candidate sets compared in the final argmax.
  std::size_t candidates = 0;
  TrialRecord record;
};

// Local search from z0 (default: greedy), then guided random greedy with
// switch time t; returns the better of the two.
PipelineResult RunRandomized(CountedOracle& oracle, SizeConstraint size,
                             const PipelineParams& params, std::uint64_t seed,
                             const std::optional<ElementSet>& z0 = {});
PipelineResult RunRandomized(CountedOracle& oracle, ExtendedMatroid& m,
                             const PipelineParams& params, std::uint64_t seed,
                             const std::optional<ElementSet>& z0 = {});

// Local search, then ell rounds of the guided interlaced greedy (guided
// while i <= t ell), advancing one uniformly drawn candidate per round.
PipelineResult RunDetermRandom(CountedOracle& oracle, SizeConstraint size,
                               const PipelineParams& params,
                               std::uint64_t seed,
                               const std::optional<ElementSet>& z0 = {});
PipelineResult RunDetermRandom(CountedOracle& oracle, ExtendedMatroid& m,
                               const PipelineParams& params,
                               std::uint64_t seed,
                               const std::optional<ElementSet>& z0 = {});

// Enumerates every branch of RunDetermRandom (duplicate sets merged per
// level) and returns the best of Z and all leaves.
PipelineResult RunDeterm(CountedOracle& oracle, SizeConstraint size,
                         const PipelineParams& params,
                         const std::optional<ElementSet>& z0 = {});
PipelineResult RunDeterm(CountedOracle& oracle, ExtendedMatroid& m,
                         const PipelineParams& params,
                         const std::optional<ElementSet>& z0 = {});

// Size constraint only. Phase 1 expands an unguided threshold-interlaced
// tree of ell1 levels, pruning every output; all pruned sets form the
// guidance pool. Phase 2 runs, for every pool member A, an ell2-level tree
// guided by A while i <= floor(t ell2). Threshold scans use eps / 2.
// Returns the best feasible set among the pool and all phase-2 leaves.
PipelineResult RunNearlyLinear(CountedOracle& oracle, SizeConstraint size,
                               const PipelineParams& params);

}  // namespace submod

#endif  // SUBMOD_PIPELINES_H_
