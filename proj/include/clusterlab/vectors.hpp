// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "clusterlab/exchange.hpp"
#include "clusterlab/linalg.hpp"

namespace clusterlab {

/// A seed together with its C-, G- and F-matrices and the walk from the root.
/// The Laurent expansions can be switched off for matrix-only walks, in which
/// case seed.cluster stays empty.
struct TrackedSeed {
  Seed seed;
  IntMatrix c;
  IntMatrix g;
  IntMatrix f;
  std::vector<std::size_t> walk;
  IntMatrix initial_b;
  bool laurent = true;

  static TrackedSeed root(const ExchangeMatrix& b, bool with_laurent = true);

  const ExchangeMatrix& matrix() const { return seed.matrix; }
  std::size_t n() const { return seed.matrix.n(); }
};

TrackedSeed mutate_tracked(const TrackedSeed& t, std::size_t k);
TrackedSeed mutate_tracked(const TrackedSeed& t, std::span<const std::size_t> walk);

/// Column j is the denominator vector of cluster variable j.
IntMatrix d_matrix(const TrackedSeed& t);

/// If column j of F is zero the variable is initial; returns that initial
/// index i (found from the g-vector e_i, with row i of F checked to vanish).
std::optional<std::size_t> initial_variable_of(const TrackedSeed& t, std::size_t j);

/// F with the columns of initial variables replaced by -e_i.
IntMatrix fbar_matrix(const TrackedSeed& t);

struct MonomialVectors {
  IntVector d;
  IntVector g;
  IntVector f;
  IntVector fbar;
};

/// Vectors of the cluster monomial prod_j x_{j;t}^{k_j}.
MonomialVectors vectors_of_monomial(const TrackedSeed& t, std::span<const std::int64_t> exponents);

/// G^T S C = S.
bool check_tropical_duality(const TrackedSeed& t);

/// Runs the walk on B and on its Langlands dual and checks
/// S F = F^dual S and S C = C^dual S entrywise.
bool check_langlands_dualities(std::span<const std::size_t> walk, const ExchangeMatrix& b);

}  // namespace clusterlab
