// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "clusterlab/explorer.hpp"
#include "clusterlab/vectors.hpp"

using namespace clusterlab;

namespace {

bool sign_coherent_columns(const IntMatrix& c) {
  for (std::size_t j = 0; j < c.cols(); ++j) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      pos = pos || c(i, j) > 0;
      neg = neg || c(i, j) < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one A2 mutation by hand") {
  // B = [[0,1],[-1,0]], mutate at 1: c_2 picks up [b_12]+ c_1, the new
  // g-vector subtracts column 1 of B, and f_1 = [c_1]+ = e_1.
  const TrackedSeed t = mutate_tracked(TrackedSeed::root(series_matrix('A', 2)), 0);
  CHECK(t.c == IntMatrix{{-1, 1}, {0, 1}});
  CHECK(t.g == IntMatrix{{-1, 0}, {1, 1}});
  CHECK(t.f == IntMatrix{{1, 0}, {0, 0}});
  CHECK(d_matrix(t) == IntMatrix{{1, 0}, {0, -1}});
  CHECK(fbar_matrix(t) == IntMatrix{{1, 0}, {0, -1}});
  CHECK(initial_variable_of(t, 1) == std::optional<std::size_t>(1));
  CHECK_FALSE(initial_variable_of(t, 0).has_value());
}

TEST_CASE("root seed") {
  const TrackedSeed t = TrackedSeed::root(series_matrix('C', 3));
  CHECK(t.c == IntMatrix::identity(3));
  CHECK(t.g == IntMatrix::identity(3));
  CHECK(t.f == IntMatrix(3, 3));
  CHECK(fbar_matrix(t) == -IntMatrix::identity(3));
  CHECK(d_matrix(t) == -IntMatrix::identity(3));
  CHECK(check_tropical_duality(t));
}

TEST_CASE("tropical duality, sign coherence and f = d on finite types") {
  for (auto [s, n] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'B', 3}, {'C', 3}}) {
    const ExchangeGraph g = explore(series_matrix(s, n), 1000);
    for (const auto& v : g.vertices) {
      const TrackedSeed& t = *v.seed;
      CHECK(check_tropical_duality(t));
      CHECK(sign_coherent_columns(t.c));
      const IntMatrix d = d_matrix(t);
      for (std::size_t j = 0; j < n; ++j)
        if (!initial_variable_of(t, j)) CHECK(d.column(j) == t.f.column(j));
    }
  }
}

TEST_CASE("the Laurent-free walk tracks the same matrices") {
  const ExchangeMatrix b = series_matrix('B', 3);
  const std::vector<std::size_t> walk{0, 2, 1, 0, 2};
  const TrackedSeed full = mutate_tracked(TrackedSeed::root(b), walk);
  const TrackedSeed lite = mutate_tracked(TrackedSeed::root(b, false), walk);
  CHECK(full.c == lite.c);
  CHECK(full.g == lite.g);
  CHECK(full.f == lite.f);
  CHECK(lite.seed.cluster.empty());
  CHECK_THROWS_AS(d_matrix(lite), std::logic_error);
}

TEST_CASE("monomial vectors are linear in the exponents") {
  const TrackedSeed t = mutate_tracked(TrackedSeed::root(series_matrix('C', 2)), std::vector<std::size_t>{0, 1});
  const std::vector<std::int64_t> e{2, 1};
  const MonomialVectors v = vectors_of_monomial(t, e);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(v.g[i] == 2 * t.g(i, 0) + t.g(i, 1));
    CHECK(v.f[i] == 2 * t.f(i, 0) + t.f(i, 1));
    CHECK(v.d[i] == 2 * d_matrix(t)(i, 0) + d_matrix(t)(i, 1));
  }
  CHECK_THROWS(vectors_of_monomial(t, std::vector<std::int64_t>{-1, 0}));
}

TEST_CASE("Langlands dualities for C2 and B2 walks") {
  for (const std::vector<std::size_t>& w :
       {std::vector<std::size_t>{}, {0}, {1}, {0, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}})
    for (char s : {'B', 'C'}) CHECK(check_langlands_dualities(w, series_matrix(s, 2)));
}
