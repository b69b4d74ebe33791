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

#ifndef SUBMOD_OBJECTIVES_H_
#define SUBMOD_OBJECTIVES_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "submod/element_set.h"

namespace submod {

// A nonnegative set function over real elements {0, ..., size() - 1}.
// Implementations are immutable after construction and safe to share
// across threads.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t size() const = 0;
  // `members` is sorted, duplicate-free and contains real ids only.
  virtual double Evaluate(std::span<const ElementId> members) const = 0;
  virtual std::string Name() const = 0;
};

struct WeightedEdge {
  ElementId u = 0;
  ElementId v = 0;
  double w = 1.0;
};

// f(S) = sum of w(u, v) over edges with exactly one endpoint in S.
class MaxCutInstance : public Objective {
 public:
  // Throws InputError on self loops, out-of-range endpoints or negative or
  // non-finite weights.
  MaxCutInstance(std::size_t n, std::vector<WeightedEdge> edges);

  std::size_t size() const override { return n_; }
  double Evaluate(std::span<const ElementId> members) const override;
  std::string Name() const override { return "maxcut"; }

  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::size_t degree(ElementId u) const {
    return offsets_[u + 1] - offsets_[u];
  }

 private:
  struct Neighbor {
    ElementId v;
    double w;
  };

  std::size_t n_;
  std::vector<WeightedEdge> edges_;
  // CSR adjacency; each undirected edge appears under both endpoints.
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> neighbors_;
};

// Returns log(max(det(M), 0) + 1) for the row-major `dim` x `dim` matrix,
// using LU factorization with partial pivoting. The empty matrix has
// determinant 1. Throws InputError on non-finite entries or a size
// mismatch.
double LogDetPlusOne(std::span<const double> matrix, std::size_t dim);

// f(S) = log(det(X_S) + 1) for a symmetric positive-semidefinite Gram
// matrix X, where X_S is the principal submatrix indexed by S.
class GramInstance : public Objective {
 public:
  // Row-major n x n matrix. Throws InputError if it is not square, not
  // symmetric within 1e-9 or contains non-finite entries.
  GramInstance(std::size_t n, std::vector<double> gram);
  // Builds X = F F^T from an n x p row-major feature matrix.
  static GramInstance FromFeatures(std::size_t n, std::size_t p,
                                   std::span<const double> features);

  std::size_t size() const override { return n_; }
  double Evaluate(std::span<const ElementId> members) const override;
  std::string Name() const override { return "logdet"; }

  double at(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  const std::vector<double>& gram() const { return gram_; }

 private:
  std::size_t n_;
  std::vector<double> gram_;
};

// f(S) = sum of weights over S. Monotone and modular; used mostly in tests.
class ModularInstance : public Objective {
 public:
  explicit ModularInstance(std::vector<double> weights);

  std::size_t size() const override { return weights_.size(); }
  double Evaluate(std::span<const ElementId> members) const override;
  std::string Name() const override { return "modular"; }

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

}  // namespace submod

#endif  // SUBMOD_OBJECTIVES_H_
