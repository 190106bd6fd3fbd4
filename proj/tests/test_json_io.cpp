// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "clusterlab/json_io.hpp"

using namespace clusterlab;

namespace {

std::string data(const std::string& name) { return std::string(CLUSTERLAB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exchange matrices") {
  const ExchangeMatrix c2 = exchange_matrix_from_json(read_json_file(data("c2.json")));
  CHECK(c2.b() == IntMatrix{{0, 1}, {-2, 0}});
  CHECK(c2.symmetrizer() == IntVector{2, 1});
  CHECK(exchange_matrix_from_json(exchange_matrix_to_json(c2)) == c2);
  CHECK_THROWS_AS(exchange_matrix_from_json(json::parse(R"({"B": [[0, 1], [1, 0]]})")), std::invalid_argument);
  CHECK_THROWS_AS(exchange_matrix_from_json(json::parse(R"({"B": [[0, 1]]})")), FormatError);
  CHECK_THROWS_AS(exchange_matrix_from_json(json::parse(R"({"n": 3, "B": [[0, 1], [-1, 0]]})")), FormatError);
  CHECK_THROWS_AS(exchange_matrix_from_json(json::parse(R"({"B": "x"})")), FormatError);
  CHECK_THROWS_AS(exchange_matrix_from_json(json::parse("{}")), FormatError);
}

TEST_CASE("bound quivers") {
  const BoundQuiver q = quiver_from_json(read_json_file(data("quiver_2cycle.json")));
  CHECK(q.num_vertices == 2);
  CHECK(q.arrows.size() == 2);
  CHECK(q.relations.size() == 2);
  const BoundQuiver r = quiver_from_json(quiver_to_json(q));
  CHECK(quiver_to_json(r) == quiver_to_json(q));
  CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices": 1, "arrows": [{"id": "a", "src": 1, "tgt": 2}]})")),
                  FormatError);
  CHECK_THROWS_AS(quiver_from_json(json::parse(
                      R"({"vertices": 2, "arrows": [{"id": "a", "src": 1, "tgt": 2}], "relations": [["a", "a"]]})")),
                  FormatError);
  CHECK_THROWS_AS(quiver_from_json(json::parse(
                      R"({"vertices": 2, "arrows": [{"id": "a", "src": 1, "tgt": 2}, {"id": "a", "src": 2, "tgt": 1}]})")),
                  FormatError);
}

TEST_CASE("disc tilings") {
  const json j = read_json_file(data("octagon_square.json"));
  const DiscTiling d = disc_from_json(j);
  CHECK(d.m == 8);
  CHECK(d.chords.size() == 4);
  CHECK(disc_from_json(disc_to_json(d)).chords == d.chords);
  CHECK_THROWS_AS(disc_from_json(json::parse(R"({"marked": 3, "chords": []})")), FormatError);
  CHECK_THROWS_AS(disc_from_json(json::parse(R"({"marked": 5, "chords": [[1, 2]]})")), FormatError);
  CHECK_THROWS_AS(disc_from_json(json::parse(R"({"marked": 5, "chords": [[1, 3], [2, 4]]})")), FormatError);
  CHECK_THROWS_AS(disc_from_json(json::parse(R"({"marked": 5, "chords": [[1, 3], [3, 1]]})")), FormatError);
}

TEST_CASE("general tilings") {
  const TilingComplex t = tiling_from_json(read_json_file(data("golden_annulus.json")));
  CHECK(t.arcs.size() == 2);
  CHECK(t.tiles.size() == 3);
  CHECK(t.tiles[0].unmarked == 1);
  REQUIRE(t.tiles[0].declared.has_value());
  CHECK(*t.tiles[0].declared == TileType::I);
  const TilingComplex back = tiling_from_json(tiling_to_json(t));
  CHECK(tiling_to_json(back) == tiling_to_json(t));
  CHECK_THROWS_AS(tiling_from_json(json::parse(R"({"surface": "torus"})")), FormatError);
  CHECK_THROWS_AS(tiling_from_json(json::parse(
                      R"({"arcs": [], "tiles": [{"sides": [{"arc": "nope"}]}]})")),
                  FormatError);
  CHECK_THROWS(read_json_file(data("missing.json")));
}
