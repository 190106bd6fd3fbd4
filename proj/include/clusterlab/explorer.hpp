// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/vectors.hpp"

namespace clusterlab {

enum class ExploreOrder { breadth_first, depth_first };

/// Exchange graph on unlabeled clusters. Each vertex keeps one labeled
/// representative seed (the first one reached).
struct ExchangeGraph {
  struct Vertex {
    std::vector<std::size_t> variables;  // sorted global ids
    std::vector<std::size_t> labeled;    // global id of cluster entry j of the representative
    std::shared_ptr<const TrackedSeed> seed;
    std::vector<std::size_t> neighbors;  // neighbors[k] = vertex reached by mutating entry k
  };

  std::size_t n = 0;
  ExchangeMatrix root_matrix;
  std::map<LaurentPoly, std::size_t> variable_index;
  std::vector<LaurentPoly> variables;
  std::vector<Vertex> vertices;
  bool complete = false;

  std::size_t num_clusters() const { return vertices.size(); }
  std::size_t num_variables() const { return variables.size(); }
};

ExchangeGraph explore(const ExchangeMatrix& b, std::size_t max_seeds,
                      ExploreOrder order = ExploreOrder::breadth_first);

/// Per-variable vectors, read from the representative of the first vertex
/// containing the variable. The index is the global variable id.
std::vector<MonomialVectors> variable_vectors(const ExchangeGraph& g);

/// Formal cluster monomial: sorted (variable id, positive exponent) pairs.
struct ClusterMonomial {
  std::vector<std::pair<std::size_t, std::int64_t>> factors;
  std::size_t vertex = 0;  // a vertex whose cluster contains every factor

  std::size_t degree() const;
};

/// Every cluster monomial of total degree 1..degree_cap, each emitted once.
std::vector<ClusterMonomial> enumerate_monomials(const ExchangeGraph& g, std::size_t degree_cap);

/// Sum of exponent-weighted per-variable vectors.
MonomialVectors monomial_vectors(const std::vector<MonomialVectors>& per_variable, const ClusterMonomial& m);

struct FiniteTypeLabel {
  bool found = false;
  std::vector<std::pair<std::string, std::size_t>> components;  // ("C", 3), ("E", 6), ...

  std::string name() const;
};

/// Dynkin label of a Cartan matrix of finite type; found = false otherwise.
/// Vertex weights s are the skew-symmetrizer entries, larger s = longer root.
FiniteTypeLabel dynkin_type(const IntMatrix& cartan, const IntVector& s);

/// Searches matrices reachable within `depth` mutations for one whose Cartan
/// counterpart is of finite type.
FiniteTypeLabel classify_finite_type(const ExchangeMatrix& b, std::size_t depth);

}  // namespace clusterlab
