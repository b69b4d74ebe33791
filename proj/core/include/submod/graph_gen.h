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

#ifndef SUBMOD_GRAPH_GEN_H_
#define SUBMOD_GRAPH_GEN_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "submod/objectives.h"

namespace submod {

enum class GraphModel { kErdosRenyi, kBarabasiAlbert, kWattsStrogatz };

struct GraphParams {
  std::size_t n = 0;
  // ER edge probability; WS rewiring probability.
  double p = 0.0;
  // BA edges attached per new vertex.
  std::size_t m = 1;
  // WS ring degree (even, < n).
  std::size_t degree = 2;
};

// Parses "er", "ba" or "ws". Throws InputError otherwise.
GraphModel ParseGraphModel(const std::string& name);
std::string GraphModelName(GraphModel model);

// Identifier of the sampling procedure, recorded with generated instances.
std::string GeneratorId(GraphModel model);

// Generates an unweighted simple graph. All draws come from one Rng seeded
// with `seed`, in this order:
//
//  ER  (gnp-lex-v1): for u < v in lexicographic order, the edge is kept iff
//      UniformUnit() < p.
//  BA  (ba-repeated-v1): vertices 0..m-1 start without edges and are the
//      targets of vertex m. Each later vertex v picks m distinct targets by
//      repeatedly drawing UniformIndex over the "repeated" list (every
//      endpoint of every edge so far) until m distinct ones are found. The
//      result has exactly m * (n - m) edges.
//  WS  (ws-ring-rewire-v1): ring lattice joining u to u+1..u+degree/2
//      (mod n). Then for j = 1..degree/2 and u = 0..n-1, edge (u, u+j) is
//      rewired with probability p to (u, w), w drawn by UniformIndex(n)
//      until w != u and (u, w) is not an edge; vertices already adjacent to
//      all others are skipped.
//
// Throws InputError on invalid parameters.
MaxCutInstance GenerateGraph(GraphModel model, const GraphParams& params,
                             std::uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_GRAPH_GEN_H_
