// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "clusterlab/exchange.hpp"

using namespace clusterlab;

TEST_CASE("matrix mutation") {
  const ExchangeMatrix a2(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(mutate_matrix(a2, 0).b() == IntMatrix{{0, -1}, {1, 0}});
  const ExchangeMatrix a3(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  const ExchangeMatrix m = mutate_matrix(a3, 1);
  CHECK(m.b() == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  for (std::size_t k = 0; k < 3; ++k) CHECK(mutate_matrix(mutate_matrix(a3, k), k) == a3);
  CHECK_THROWS(mutate_matrix(a3, 3));
}

TEST_CASE("mutation keeps the skew-symmetrizer and commutes with the dual") {
  const ExchangeMatrix c3 = series_matrix('C', 3);
  ExchangeMatrix m = c3;
  for (std::size_t k : {0, 1, 2, 0, 2, 1}) {
    const ExchangeMatrix next = mutate_matrix(m, k);
    CHECK(next.symmetrizer() == c3.symmetrizer());
    CHECK(langlands_dual(next) == mutate_matrix(langlands_dual(m), k));
    m = next;
  }
}

TEST_CASE("skew-symmetrizers") {
  CHECK(find_skew_symmetrizer(IntMatrix{{0, 1}, {-1, 0}}) == IntVector{1, 1});
  CHECK(find_skew_symmetrizer(IntMatrix{{0, 1}, {-2, 0}}) == IntVector{2, 1});
  CHECK_FALSE(find_skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}).has_value());
  CHECK_FALSE(find_skew_symmetrizer(IntMatrix{{0, 1}, {0, 0}}).has_value());
  CHECK_FALSE(find_skew_symmetrizer(IntMatrix{{1, 0}, {0, 0}}).has_value());
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  // Disconnected blocks are normalized separately.
  CHECK(find_skew_symmetrizer(IntMatrix{{0, 2, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -1, 0}}) ==
        IntVector{1, 2, 1, 3});
  CHECK(series_matrix('C', 4).symmetrizer() == IntVector{2, 1, 1, 1});
  CHECK(series_matrix('B', 3).symmetrizer() == IntVector{1, 2, 2});
}

TEST_CASE("Cartan counterpart and Langlands dual") {
  CHECK(cartan_counterpart(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}})) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_counterpart(ExchangeMatrix(IntMatrix{{0, 1}, {-2, 0}})) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_counterpart(ExchangeMatrix(IntMatrix(3, 3))) == IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const ExchangeMatrix c2(IntMatrix{{0, 1}, {-2, 0}});
  CHECK(langlands_dual(c2).b() == IntMatrix{{0, 2}, {-1, 0}});
  CHECK(langlands_dual(langlands_dual(c2)) == c2);
  const ExchangeMatrix a3 = series_matrix('A', 3);
  CHECK(langlands_dual(a3) == a3);
  CHECK(langlands_dual(series_matrix('C', 3)) == series_matrix('B', 3));
}

TEST_CASE("seed mutation") {
  const Seed s0 = Seed::initial(series_matrix('A', 2));
  const Seed s1 = mutate_seed(s0, 0);
  CHECK(to_string(s1.cluster[0]) == "1 * x1^-1 x2^1 + 1 * x1^-1");
  CHECK(s1.cluster[1] == s0.cluster[1]);
  CHECK(mutate_seed(s1, 0) == s0);

  // Pentagon periodicity: after 1,2,1,2,1 the entries come back swapped.
  Seed s = s0;
  for (std::size_t k : {0, 1, 0, 1, 0}) s = mutate_seed(s, k);
  CHECK(s.cluster[0] == s0.cluster[1]);
  CHECK(s.cluster[1] == s0.cluster[0]);
}

TEST_CASE("mutation sequences are 1-based") {
  CHECK(parse_mutation_sequence("1,2,1", 2) == std::vector<std::size_t>{0, 1, 0});
  CHECK(parse_mutation_sequence(" 3 , 1", 3) == std::vector<std::size_t>{2, 0});
  CHECK_THROWS(parse_mutation_sequence("0", 2));
  CHECK_THROWS(parse_mutation_sequence("3", 2));
  CHECK_THROWS(parse_mutation_sequence("1,x", 2));
}
