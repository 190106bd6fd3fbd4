// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "clusterlab/linalg.hpp"

using namespace clusterlab;

namespace {

// Leibniz expansion, independent of the elimination code.
mpz_class leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= static_cast<long>(m(i, p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<long>(m(i, j));
  return r;
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
  CHECK(positive_part(-4) == 0);
  CHECK(positive_part(4) == 4);
}

TEST_CASE("matrix products and transposes") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {-1, 0}};
  CHECK(a * b == IntMatrix{{-2, 1}, {-4, 3}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(-a == IntMatrix{{-1, -2}, {-3, -4}});
  const IntVector v{1, -1};
  CHECK(a * v == IntVector{-1, -1});
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, 4);
    CHECK(determinant(m) == leibniz(m));
  }
  CHECK(determinant(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("rank and nullspace satisfy rank-nullity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMatrix m = random_matrix(rng, r, c, 2);
    if (trial % 3 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
    const RatMatrix q = to_rat(m);
    const RatMatrix ns = nullspace(q);
    CHECK(rank(m) == rank(q));
    CHECK(rank(q) + ns.cols() == c);
    if (ns.cols() > 0) {
      CHECK((q * ns).is_zero());
      CHECK(rank(ns) == ns.cols());
    }
  }
}

TEST_CASE("solving a full column rank system") {
  RatMatrix a(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 0) = 1;
  a(2, 1) = 1;
  RatMatrix b(3, 1);
  b(0, 0) = 2;
  b(1, 0) = mpq_class(1, 3);
  b(2, 0) = mpq_class(7, 3);
  RatMatrix x;
  REQUIRE(solve_full_column_rank(a, b, x));
  CHECK(x(0, 0) == 2);
  CHECK(x(1, 0) == mpq_class(1, 3));
  b(2, 0) = 0;
  CHECK_FALSE(solve_full_column_rank(a, b, x));
}
