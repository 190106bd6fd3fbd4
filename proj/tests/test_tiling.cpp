// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "clusterlab/json_io.hpp"
#include "clusterlab/tiling.hpp"

using namespace clusterlab;

namespace {

std::pair<int, int> chord_of(const PermissibleArc& a) {
  return {std::min(a.start_point, a.end_point), std::max(a.start_point, a.end_point)};
}

std::size_t arc_index(const ArcInventory& inv, std::pair<int, int> chord) {
  for (std::size_t i = 0; i < inv.arcs.size(); ++i)
    if (chord_of(inv.arcs[i]) == chord) return i;
  FAIL("no permissible arc for chord {" << chord.first << "," << chord.second << "}");
  return 0;
}

// Counts every set of pairwise non-crossing diagonals of an m-gon.
std::size_t brute_force_dissections(int m) {
  std::vector<std::pair<int, int>> diagonals;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 2; b <= m; ++b)
      if (!(a == 1 && b == m)) diagonals.emplace_back(a, b);
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << diagonals.size()); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < diagonals.size(); ++i)
      for (std::size_t j = i + 1; ok && j < diagonals.size(); ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && chords_interleave(diagonals[i], diagonals[j])) ok = false;
    count += ok ? 1 : 0;
  }
  return count;
}

TilingComplex load(const std::string& name) { return tiling_from_json(read_json_file(std::string(CLUSTERLAB_DATA_DIR) + "/" + name)); }

}  // namespace

TEST_CASE("chord interleaving") {
  CHECK(chords_interleave({1, 3}, {2, 4}));
  CHECK(chords_interleave({2, 4}, {1, 3}));
  CHECK_FALSE(chords_interleave({1, 3}, {3, 5}));
  CHECK_FALSE(chords_interleave({1, 4}, {2, 3}));
  CHECK_FALSE(chords_interleave({1, 3}, {1, 3}));
}

TEST_CASE("disc tiling enumeration") {
  CHECK(disc_tilings(4).size() == 3);
  CHECK(disc_tilings(5).size() == 11);
  for (int m = 6; m <= 7; ++m) CHECK(disc_tilings(m).size() == brute_force_dissections(m));
  CHECK_THROWS(disc_tilings(3));
}

TEST_CASE("pentagon with chords {1,3} and {1,4}") {
  const TilingComplex t = load("pentagon.json");
  t.validate();
  CHECK(classify_tiles(t) == std::vector<TileType>{TileType::III, TileType::IV, TileType::III});
  CHECK(forbidden_tile_scan(t));
  const TilingAlgebra alg = tiling_algebra(t);
  REQUIRE(alg.quiver.arrows.size() == 1);
  CHECK(alg.quiver.arrows[0].id == "{1,3}_{1,4}");
  CHECK(alg.quiver.relations.empty());

  const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
  REQUIRE(inv.arcs.size() == 3);
  const auto& a24 = inv.arcs[arc_index(inv, {2, 4})];
  CHECK(a24.int_vector == IntVector{1, 0});
  CHECK(to_string(alg.quiver, a24.word) == "e1");
  // Hand trace: ends in the corner at vertex 2 of the first triangle and the
  // corner at vertex 4 of the square, crossing no angle.
  CHECK(std::set<SegKey>{a24.start, a24.end} == std::set<SegKey>{{0, 1}, {1, 1}});
  CHECK(a24.crossings.empty());
  CHECK(inv.arcs[arc_index(inv, {3, 5})].int_vector == IntVector{0, 1});
  const auto& a25 = inv.arcs[arc_index(inv, {2, 5})];
  CHECK(a25.int_vector == IntVector{1, 1});
  CHECK(to_string(alg.quiver, a25.word) == "{1,3}_{1,4}");

  const ArcMultiset pair{{arc_index(inv, {2, 4}), 1}, {arc_index(inv, {2, 5}), 1}};
  CHECK(intersection_vector(inv, pair) == IntVector{2, 1});
}

TEST_CASE("interior triangles of a triangulation are type V") {
  const TilingComplex t = disc_complex(DiscTiling{6, {{1, 3}, {3, 5}, {1, 5}}});
  const auto types = classify_tiles(t);
  CHECK(std::count(types.begin(), types.end(), TileType::V) == 1);
  CHECK(std::count(types.begin(), types.end(), TileType::III) == 3);
  // Three arrows around the inner triangle, all composites zero.
  const TilingAlgebra alg = tiling_algebra(t);
  CHECK(alg.quiver.arrows.size() == 3);
  CHECK(alg.quiver.relations.size() == 3);
  CHECK_FALSE(detect_even_full_cycle(alg.quiver).has_value());
}

TEST_CASE("triangulations give gentle algebras without even cycles") {
  for (int m = 4; m <= 9; ++m)
    for (const auto& d : disc_tilings(m)) {
      if (static_cast<int>(d.chords.size()) != m - 3) continue;
      const TilingComplex t = disc_complex(d);
      REQUIRE(is_classifiable(t));
      const TilingAlgebra alg = tiling_algebra(t);
      CHECK(check_gentle(alg.quiver).gentle);
      CHECK_FALSE(detect_even_full_cycle(alg.quiver).has_value());
      if (m <= 7) {
        const std::size_t n = m - 3;
        const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
        CHECK(inv.arcs.size() == n * (n + 3) / 2 - n);
      }
    }
}

TEST_CASE("string and geometric routes agree on small discs") {
  for (int m = 4; m <= 7; ++m)
    for (const auto& d : disc_tilings(m)) {
      const TilingComplex t = disc_complex(d);
      if (!is_classifiable(t)) continue;
      const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
      REQUIRE_FALSE(inv.cap_reached);
      const auto geo = geometric_permissible_chords(d, t);
      REQUIRE(geo.size() == inv.arcs.size());
      for (const auto& g : geo) {
        const auto& a = inv.arcs[arc_index(inv, {g.p, g.q})];
        CHECK(a.int_vector == g.int_vector);
        CHECK(std::set<SegKey>{a.start, a.end} == std::set<SegKey>{g.start, g.end});
        CHECK(std::multiset<SegKey>(a.crossings.begin(), a.crossings.end()) ==
              std::multiset<SegKey>(g.crossings.begin(), g.crossings.end()));
      }
      const auto compat = compatibility_matrix(inv);
      for (std::size_t i = 0; i < inv.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < inv.arcs.size(); ++j)
          CHECK(compat[i][j] != chords_interleave(chord_of(inv.arcs[i]), chord_of(inv.arcs[j])));
    }
}

TEST_CASE("segment profiles add up") {
  const TilingComplex t = disc_complex(DiscTiling{7, {{1, 3}, {3, 6}, {4, 6}}});
  const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
  for (std::size_t i = 0; i < inv.arcs.size(); ++i)
    for (std::size_t j = 0; j < inv.arcs.size(); ++j) {
      const ArcMultiset both = i == j ? ArcMultiset{{i, 2}} : ArcMultiset{{std::min(i, j), 1}, {std::max(i, j), 1}};
      const SegProfile a = seg_profile(inv, {{i, 1}}), b = seg_profile(inv, {{j, 1}}), ab = seg_profile(inv, both);
      SegProfile sum = a;
      for (const auto& [k, c] : b.angles) sum.angles[k] += c;
      for (const auto& [k, c] : b.endpoints) sum.endpoints[k] += c;
      CHECK(ab == sum);
    }
}

TEST_CASE("the central square breaks injectivity") {
  const TilingComplex t = load("octagon_square.json");
  CHECK(is_classifiable(t));
  CHECK_FALSE(forbidden_tile_scan(t));
  const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
  const auto idx = [&](int a, int b) { return arc_index(inv, {a, b}); };
  auto ms = [](std::size_t x, std::size_t y) { return ArcMultiset{{std::min(x, y), 1}, {std::max(x, y), 1}}; };
  const ArcMultiset left = ms(idx(2, 8), idx(4, 6)), right = ms(idx(2, 4), idx(6, 8));
  CHECK(intersection_vector(inv, left) == IntVector{1, 1, 1, 1});
  CHECK(intersection_vector(inv, left) == intersection_vector(inv, right));
  CHECK_FALSE(local_global_equal(inv, left, right));
  const auto compat = compatibility_matrix(inv);
  CHECK(compat[idx(2, 8)][idx(4, 6)]);
  CHECK(compat[idx(2, 4)][idx(6, 8)]);
}

TEST_CASE("flips are involutions") {
  for (const auto& d : disc_tilings(7)) {
    if (d.chords.size() != 4) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      const DiscTiling f = flip(d, k);
      CHECK(f.chords.size() == 4);
      CHECK(f.chords != d.chords);
      const DiscTiling back = flip(f, k);
      CHECK(std::set(back.chords.begin(), back.chords.end()) == std::set(d.chords.begin(), d.chords.end()));
    }
  }
  CHECK_THROWS(flip(DiscTiling{6, {{1, 4}}}, 0));
}

TEST_CASE("the annulus with a loop") {
  const TilingComplex t = load("golden_annulus.json");
  const json expected = read_json_file(std::string(CLUSTERLAB_DATA_DIR) + "/golden_annulus_expected.json");
  std::vector<std::string> types;
  for (auto ty : classify_tiles(t)) types.push_back(to_string(ty));
  CHECK(types == expected.at("tile_types").get<std::vector<std::string>>());

  const TilingAlgebra alg = tiling_algebra(t);
  REQUIRE(alg.quiver.arrows.size() == expected.at("arrows").size());
  for (const auto& a : expected.at("arrows")) {
    const auto i = alg.quiver.find_arrow(a.at("id").get<std::string>());
    REQUIRE(i.has_value());
    CHECK(t.arcs[alg.quiver.arrows[*i].src].id == a.at("src").get<std::string>());
    CHECK(t.arcs[alg.quiver.arrows[*i].tgt].id == a.at("tgt").get<std::string>());
  }
  CHECK(alg.quiver.relations.size() == 1);
  const auto loop = *alg.quiver.find_arrow("l_l");
  CHECK(alg.quiver.is_relation(loop, loop));
  CHECK(check_gentle(alg.quiver).gentle);

  const ArcInventory inv = enumerate_permissible_arcs(t, default_arc_cap(t));
  CHECK_FALSE(inv.cap_reached);
  REQUIRE(inv.arcs.size() == expected.at("arcs").size());
  for (const auto& e : expected.at("arcs")) {
    const auto it = std::find_if(inv.arcs.begin(), inv.arcs.end(), [&](const PermissibleArc& a) {
      return to_string(alg.quiver, a.word) == e.at("string").get<std::string>();
    });
    REQUIRE(it != inv.arcs.end());
    CHECK(it->int_vector == e.at("intersection").get<IntVector>());
    const auto ends = e.at("ends").get<std::pair<int, int>>();
    CHECK(chord_of(*it) == ends);
  }
  const auto family = compatible_multisets(compatibility_matrix(inv), 3);
  CHECK(family.size() == expected.at("compatible_multisets_mult_cap_3").get<std::size_t>());
  for (const auto& m : family) CHECK(one_loop_property(t, inv, m));
}

TEST_CASE("malformed complexes are rejected") {
  TilingComplex t;
  t.arcs.push_back({"x", 1, 2});
  Tile tile;
  tile.sides.push_back({false, 0, false, 0, 0});
  tile.sides.push_back({true, 0, false, 2, 1});
  t.tiles.push_back(tile);
  CHECK_THROWS(t.validate());
}
