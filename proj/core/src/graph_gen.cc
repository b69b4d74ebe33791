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

#include "submod/graph_gen.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "submod/errors.h"
#include "submod/random.h"

namespace submod {
namespace {

MaxCutInstance ErdosRenyi(const GraphParams& params, Rng& rng) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw InputError("ER probability must lie in [0, 1]");
  }
  std::vector<WeightedEdge> edges;
  for (std::size_t u = 0; u < params.n; ++u) {
    for (std::size_t v = u + 1; v < params.n; ++v) {
      if (UniformUnit(rng) < params.p) {
        edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v),
                         1.0});
      }
    }
  }
  return MaxCutInstance(params.n, std::move(edges));
}

MaxCutInstance BarabasiAlbert(const GraphParams& params, Rng& rng) {
  const std::size_t n = params.n;
  const std::size_t m = params.m;
  if (m < 1 || m >= n) {
    throw InputError("BA requires 1 <= m < n");
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(m * (n - m));
  std::vector<ElementId> repeated;
  std::vector<ElementId> targets(m);
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<ElementId>(i);
  for (std::size_t source = m; source < n; ++source) {
    for (ElementId t : targets) {
      edges.push_back({t, static_cast<ElementId>(source), 1.0});
      repeated.push_back(t);
      repeated.push_back(static_cast<ElementId>(source));
    }
    // Distinct targets for the next vertex, in draw order.
    targets.clear();
    std::set<ElementId> seen;
    while (targets.size() < m) {
      ElementId pick = repeated[UniformIndex(rng, repeated.size())];
      if (seen.insert(pick).second) targets.push_back(pick);
    }
  }
  return MaxCutInstance(n, std::move(edges));
}

MaxCutInstance WattsStrogatz(const GraphParams& params, Rng& rng) {
  const std::size_t n = params.n;
  const std::size_t d = params.degree;
  if (d == 0 || d % 2 != 0 || d >= n) {
    throw InputError("WS ring degree must be even, positive and < n");
  }
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw InputError("WS rewiring probability must lie in [0, 1]");
  }
  std::vector<std::set<ElementId>> adj(n);
  auto add = [&](ElementId a, ElementId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::size_t j = 1; j <= d / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      add(static_cast<ElementId>(u), static_cast<ElementId>((u + j) % n));
    }
  }
  for (std::size_t j = 1; j <= d / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto a = static_cast<ElementId>(u);
      const auto b = static_cast<ElementId>((u + j) % n);
      if (UniformUnit(rng) >= params.p) continue;
      if (!adj[a].contains(b)) continue;  // Already rewired away.
      if (adj[a].size() >= n - 1) continue;
      ElementId w;
      do {
        w = static_cast<ElementId>(UniformIndex(rng, n));
      } while (w == a || adj[a].contains(w));
      adj[a].erase(b);
      adj[b].erase(a);
      add(a, w);
    }
  }
  std::vector<WeightedEdge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (ElementId v : adj[u]) {
      if (v > u) edges.push_back({static_cast<ElementId>(u), v, 1.0});
    }
  }
  return MaxCutInstance(n, std::move(edges));
}

}  // namespace

GraphModel ParseGraphModel(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "er") return GraphModel::kErdosRenyi;
  if (lower == "ba") return GraphModel::kBarabasiAlbert;
  if (lower == "ws") return GraphModel::kWattsStrogatz;
  throw InputError("unknown graph model '" + name + "' (expected er, ba, ws)");
}

std::string GraphModelName(GraphModel model) {
  switch (model) {
    case GraphModel::kErdosRenyi:
      return "er";
    case GraphModel::kBarabasiAlbert:
      return "ba";
    case GraphModel::kWattsStrogatz:
      return "ws";
  }
  return "unknown";
}

std::string GeneratorId(GraphModel model) {
  switch (model) {
    case GraphModel::kErdosRenyi:
      return "gnp-lex-v1";
    case GraphModel::kBarabasiAlbert:
      return "ba-repeated-v1";
    case GraphModel::kWattsStrogatz:
      return "ws-ring-rewire-v1";
  }
  return "unknown";
}

MaxCutInstance GenerateGraph(GraphModel model, const GraphParams& params,
                             std::uint64_t seed) {
  if (params.n == 0) throw InputError("graph needs n >= 1");
  Rng rng(seed);
  switch (model) {
    case GraphModel::kErdosRenyi:
      return ErdosRenyi(params, rng);
    case GraphModel::kBarabasiAlbert:
      return BarabasiAlbert(params, rng);
    case GraphModel::kWattsStrogatz:
      return WattsStrogatz(params, rng);
  }
  throw InputError("unknown graph model");
}

}  // namespace submod
