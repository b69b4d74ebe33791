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

#include "submod/objectives.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "submod/errors.h"

namespace submod {

MaxCutInstance::MaxCutInstance(std::size_t n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)), offsets_(n + 1, 0) {
  for (const WeightedEdge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range for n=" +
                       std::to_string(n_));
    }
    if (e.u == e.v) {
      throw InputError("self loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw InputError("edge weight must be finite and nonnegative");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const WeightedEdge& e : edges_) {
    neighbors_[fill[e.u]++] = {e.v, e.w};
    neighbors_[fill[e.v]++] = {e.u, e.w};
  }
}

double MaxCutInstance::Evaluate(std::span<const ElementId> members) const {
  // Per-thread membership marks, cleared again before returning.
  thread_local std::vector<std::uint8_t> mark;
  if (mark.size() < n_) mark.resize(n_, 0);
  for (ElementId u : members) mark[u] = 1;
  double cut = 0.0;
  for (ElementId u : members) {
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Neighbor& nb = neighbors_[i];
      if (!mark[nb.v]) cut += nb.w;
    }
  }
  for (ElementId u : members) mark[u] = 0;
  return cut;
}

double LogDetPlusOne(std::span<const double> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) {
    throw InputError("matrix size does not match dimension");
  }
  for (double x : matrix) {
    if (!std::isfinite(x)) throw InputError("non-finite matrix entry");
  }
  if (dim == 0) return std::log(2.0);

  std::vector<double> lu(matrix.begin(), matrix.end());
  double log_abs_det = 0.0;
  bool negative = false;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu[col * dim + col]);
    for (std::size_t row = col + 1; row < dim; ++row) {
      double v = std::abs(lu[row * dim + col]);
      if (v > best) {
        best = v;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;  // Singular: log(0 + 1).
    if (pivot != col) {
      for (std::size_t j = 0; j < dim; ++j) {
        std::swap(lu[col * dim + j], lu[pivot * dim + j]);
      }
      negative = !negative;
    }
    const double diag = lu[col * dim + col];
    if (diag < 0.0) negative = !negative;
    log_abs_det += std::log(std::abs(diag));
    for (std::size_t row = col + 1; row < dim; ++row) {
      const double factor = lu[row * dim + col] / diag;
      if (factor == 0.0) continue;
      for (std::size_t j = col + 1; j < dim; ++j) {
        lu[row * dim + j] -= factor * lu[col * dim + j];
      }
    }
  }
  // Negative determinants are PSD roundoff; clamp to 0.
  if (negative) return 0.0;
  // log(det + 1) without overflowing det.
  if (log_abs_det > 0.0) return log_abs_det + std::log1p(std::exp(-log_abs_det));
  return std::log1p(std::exp(log_abs_det));
}

GramInstance::GramInstance(std::size_t n, std::vector<double> gram)
    : n_(n), gram_(std::move(gram)) {
  if (gram_.size() != n_ * n_) {
    throw InputError("Gram matrix must be n x n");
  }
  for (double x : gram_) {
    if (!std::isfinite(x)) throw InputError("non-finite Gram entry");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double a = gram_[i * n_ + j];
      const double b = gram_[j * n_ + i];
      if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a))) {
        throw InputError("Gram matrix is not symmetric at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

GramInstance GramInstance::FromFeatures(std::size_t n, std::size_t p,
                                        std::span<const double> features) {
  if (features.size() != n * p) {
    throw InputError("feature matrix must be n x p");
  }
  std::vector<double> gram(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t c = 0; c < p; ++c) {
        dot += features[i * p + c] * features[j * p + c];
      }
      gram[i * n + j] = dot;
      gram[j * n + i] = dot;
    }
  }
  return GramInstance(n, std::move(gram));
}

double GramInstance::Evaluate(std::span<const ElementId> members) const {
  const std::size_t d = members.size();
  std::vector<double> sub(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      sub[i * d + j] = gram_[members[i] * n_ + members[j]];
    }
  }
  return LogDetPlusOne(sub, d);
}

ModularInstance::ModularInstance(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("modular weights must be finite and nonnegative");
    }
  }
}

double ModularInstance::Evaluate(std::span<const ElementId> members) const {
  double total = 0.0;
  for (ElementId x : members) total += weights_[x];
  return total;
}

}  // namespace submod
