// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "clusterlab/gentle.hpp"

using namespace clusterlab;

namespace {

BoundQuiver linear(std::size_t n) {
  BoundQuiver q;
  q.num_vertices = n;
  for (std::size_t i = 0; i + 1 < n; ++i) q.add_arrow("a" + std::to_string(i + 1), i, i + 1);
  return q;
}

BoundQuiver loop_quiver() {
  BoundQuiver q;
  q.num_vertices = 1;
  const auto r = q.add_arrow("r", 0, 0);
  q.add_relation(r, r);
  return q;
}

BoundQuiver two_cycle() {
  BoundQuiver q;
  q.num_vertices = 2;
  const auto a = q.add_arrow("a", 0, 1);
  const auto b = q.add_arrow("b", 1, 0);
  q.add_relation(a, b);
  q.add_relation(b, a);
  return q;
}

StringWord word(std::size_t start, std::vector<Letter> letters) { return StringWord{start, std::move(letters)}; }

}  // namespace

TEST_CASE("gentle conditions") {
  CHECK(check_gentle(linear(3)).gentle);
  CHECK(check_gentle(loop_quiver()).gentle);
  CHECK(check_gentle(two_cycle()).gentle);

  BoundQuiver three_out;
  three_out.num_vertices = 4;
  for (std::size_t t = 1; t <= 3; ++t) three_out.add_arrow("x" + std::to_string(t), 0, t);
  CHECK_FALSE(check_gentle(three_out).gentle);

  BoundQuiver free_loop;
  free_loop.num_vertices = 1;
  free_loop.add_arrow("r", 0, 0);
  CHECK_FALSE(is_finite_dimensional(free_loop));
  CHECK(is_finite_dimensional(loop_quiver()));
}

TEST_CASE("Cartan matrices and even full cycles") {
  // Entry (i, j) counts paths from j to i.
  CHECK(cartan_matrix(linear(3)) == IntMatrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(determinant(cartan_matrix(two_cycle())) == 0);
  CHECK(detect_even_full_cycle(two_cycle()).has_value());
  CHECK(determinant(cartan_matrix(loop_quiver())) == 2);
  CHECK_FALSE(detect_even_full_cycle(loop_quiver()).has_value());
  CHECK_FALSE(detect_even_full_cycle(linear(4)).has_value());
}

TEST_CASE("strings and string modules") {
  const BoundQuiver q = two_cycle();
  CHECK_FALSE(string_defect(q, word(0, {{0, false}})).has_value());
  CHECK(string_defect(q, word(0, {{0, false}, {1, false}})).has_value());
  CHECK(string_defect(q, word(0, {{0, false}, {0, true}})).has_value());
  CHECK(string_defect(q, word(1, {{0, false}})).has_value());
  const QuiverRep m = string_module(q, word(0, {{0, false}}));
  CHECK(m.dim_vector() == IntVector{1, 1});
  CHECK(is_valid_rep(q, m));
  CHECK(to_string(q, word(1, {{0, true}})) == "a^-1");
  CHECK(to_string(q, word(1, {})) == "e2");
  CHECK(canonical_word(q, word(1, {{0, true}})) == canonical_word(q, word(0, {{0, false}})));
}

TEST_CASE("projectives, injectives and the Yoneda count") {
  const BoundQuiver q = linear(3);
  const PathTable t(q);
  CHECK(projective_rep(t, 0).dim_vector() == IntVector{1, 1, 1});
  CHECK(projective_rep(t, 2).dim_vector() == IntVector{0, 0, 1});
  CHECK(injective_rep(t, 0).dim_vector() == IntVector{1, 0, 0});
  CHECK(injective_rep(t, 2).dim_vector() == IntVector{1, 1, 1});
  const auto inv = enumerate_tau_rigid(q, default_string_cap(q));
  CHECK(inv.strings.size() == 6);
  for (const auto& w : inv.strings) {
    const QuiverRep m = string_module(q, w);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK(hom_dim(q, projective_rep(t, v), m) == static_cast<std::size_t>(m.dim_vector()[v]));
  }
  const BoundQuiver c = two_cycle();
  const PathTable tc(c);
  const QuiverRep s = string_module(c, word(1, {{1, false}}));
  for (std::size_t v = 0; v < 2; ++v) CHECK(hom_dim(c, projective_rep(tc, v), s) == 1);
}

TEST_CASE("AR translates on the linear A3 path algebra") {
  // Read off the AR quiver of 1 -> 2 -> 3.
  const BoundQuiver q = linear(3);
  const PathTable t(q);
  const std::vector<std::pair<IntVector, IntVector>> expected{
      {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, {{1, 1, 0}, {0, 1, 1}},
      {{0, 0, 1}, {0, 0, 0}}, {{0, 1, 1}, {0, 0, 0}}, {{1, 1, 1}, {0, 0, 0}}};
  const auto inv = enumerate_tau_rigid(q, default_string_cap(q));
  for (const auto& w : inv.strings) {
    const QuiverRep m = string_module(q, w);
    const auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.first == m.dim_vector(); });
    REQUIRE(it != expected.end());
    CHECK(ar_translate(t, m).dim_vector() == it->second);
  }
  CHECK(inv.rigid.size() == 6);
}

TEST_CASE("tau-rigid modules over small algebras") {
  const BoundQuiver a2 = linear(2);
  CHECK(enumerate_tau_rigid(a2, default_string_cap(a2)).rigid.size() == 3);
  // k[x]/x^2: the simple is its own translate, only the projective is rigid.
  const BoundQuiver l = loop_quiver();
  const auto inv = enumerate_tau_rigid(l, default_string_cap(l));
  CHECK(inv.strings.size() == 2);
  REQUIRE(inv.rigid.size() == 1);
  CHECK(inv.rigid[0].dim == IntVector{2});
  const BoundQuiver c = two_cycle();
  const auto ci = enumerate_tau_rigid(c, default_string_cap(c));
  CHECK_FALSE(ci.representation_infinite);
  for (const auto& m : ci.rigid) CHECK(is_tau_rigid(PathTable(c), m.module));
}

TEST_CASE("type C quivers") {
  const BoundQuiver c2 = type_c_quiver(series_matrix('C', 2));
  CHECK(c2.num_vertices == 2);
  CHECK(c2.arrows.size() == 2);
  CHECK(check_qb_conditions(c2).all());
  CHECK(check_gentle(c2).gentle);
  CHECK_FALSE(detect_even_full_cycle(c2).has_value());
  const BoundQuiver c3 = type_c_quiver(series_matrix('C', 3));
  CHECK(check_qb_conditions(c3).all());
  CHECK(check_gentle(c3).gentle);
  CHECK_THROWS(type_c_quiver(series_matrix('A', 3)));
}

TEST_CASE("gentle quiver enumeration") {
  const auto one = enumerate_gentle_quivers(1, 2);
  CHECK(one.size() == 2);
  for (const auto& q : enumerate_gentle_quivers(2, 2)) {
    CHECK(check_gentle(q).gentle);
    CHECK(is_finite_dimensional(q));
  }
}

TEST_CASE("canonical codes ignore vertex labels") {
  BoundQuiver p;
  p.num_vertices = 3;
  const auto a = p.add_arrow("a", 0, 1);
  const auto b = p.add_arrow("b", 1, 2);
  p.add_relation(a, b);
  BoundQuiver r;
  r.num_vertices = 3;
  const auto b2 = r.add_arrow("b", 0, 2);
  const auto a2 = r.add_arrow("a", 1, 0);
  r.add_relation(a2, b2);
  CHECK(canonical_code(p) == canonical_code(r));
  CHECK(canonical_code(p) != canonical_code(linear(3)));
}
