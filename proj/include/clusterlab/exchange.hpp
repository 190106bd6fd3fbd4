// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterlab/laurent.hpp"
#include "clusterlab/linalg.hpp"

namespace clusterlab {

struct NotSkewSymmetrizable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Minimal positive integer diagonal S with SB skew-symmetric, normalised
/// separately on each connected component of B. Empty when none exists.
std::optional<IntVector> find_skew_symmetrizer(const IntMatrix& b);

/// Skew-symmetrizable exchange matrix together with its skew-symmetrizer.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// Throws NotSkewSymmetrizable.
  explicit ExchangeMatrix(IntMatrix b);
  /// Uses the given diagonal after checking that it symmetrizes b.
  ExchangeMatrix(IntMatrix b, IntVector symmetrizer);

  std::size_t n() const { return b_.rows(); }
  const IntMatrix& b() const { return b_; }
  const IntVector& symmetrizer() const { return s_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return b_(i, j); }

  bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }

 private:
  IntMatrix b_;
  IntVector s_;
};

/// Matrix mutation in direction k (0-based).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// c_ii = 2, c_ij = -|b_ij|.
IntMatrix cartan_counterpart(const ExchangeMatrix& b);

/// -B^T with its own minimal skew-symmetrizer.
ExchangeMatrix langlands_dual(const ExchangeMatrix& b);

/// Labeled seed: exchange matrix plus cluster variables expanded in the
/// initial cluster.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> cluster;

  static Seed initial(const ExchangeMatrix& b);
  bool operator==(const Seed&) const = default;
};

/// Seed mutation in direction k (0-based); the new variable is obtained by
/// exact Laurent division.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Parses "1,2,1" into 0-based directions, checking each is in 1..n.
std::vector<std::size_t> parse_mutation_sequence(const std::string& text, std::size_t n);

/// Standard exchange matrices of the A, B and C series, linear orientation.
/// C_n has b_12 = 1, b_21 = -2 so that S = diag(2, 1, ..., 1); B_n is its
/// Langlands dual.
ExchangeMatrix series_matrix(char series, std::size_t n);

}  // namespace clusterlab
