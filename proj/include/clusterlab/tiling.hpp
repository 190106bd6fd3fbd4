// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/gentle.hpp"
#include "clusterlab/linalg.hpp"

namespace clusterlab {

/// Arc of the partial triangulation, running from marked point end0 to end1.
struct TilingArc {
  std::string id;
  int end0 = 0;
  int end1 = 0;
};

/// Side of a tile, traversed anticlockwise (tile interior on the left). An arc
/// side with reversed = true runs from end1 to end0.
struct TilingSide {
  bool boundary = false;
  std::size_t arc = 0;
  bool reversed = false;
  int from = 0;  // boundary sides only
  int to = 0;
};

enum class TileType { I, II, III, IV, V };

std::string to_string(TileType t);

struct Tile {
  std::vector<TilingSide> sides;
  std::size_t unmarked = 0;  // unmarked boundary components inside the tile
  std::optional<TileType> declared;
};

/// Tiles glued along arcs. Vertex k of a tile is the start of side k; corner k
/// sits there, between side k-1 and side k.
struct TilingComplex {
  std::vector<TilingArc> arcs;
  std::vector<Tile> tiles;

  int side_start(std::size_t tile, std::size_t side) const;
  int side_end(std::size_t tile, std::size_t side) const;
  /// The two (tile, side) slots occupied by an arc.
  std::vector<std::pair<std::size_t, std::size_t>> slots(std::size_t arc) const;
  /// Throws std::invalid_argument: sides must chain up, every arc must fill
  /// exactly two slots traversed in opposite directions.
  void validate() const;
};

struct UnclassifiableTile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws UnclassifiableTile, also when a declared type disagrees.
std::vector<TileType> classify_tiles(const TilingComplex& t);

/// Whether a tile classification succeeds.
bool is_classifiable(const TilingComplex& t);

/// No tile of type II and no even-gon of type V.
bool forbidden_tile_scan(const TilingComplex& t);

struct TilingAlgebra {
  BoundQuiver quiver;  // vertex i = arc i
  std::vector<std::pair<std::size_t, std::size_t>> arrow_corner;  // (tile, corner) of each arrow
};

TilingAlgebra tiling_algebra(const TilingComplex& t);

/// (tile, corner) for an angle crossing, (tile, vertex) for an endpoint.
struct SegKey {
  std::size_t tile = 0;
  std::size_t index = 0;
  auto operator<=>(const SegKey&) const = default;
};

/// Permissible arc encoded by its string, with the segment trace read off the
/// letters: two endpoint configurations and one angle crossing per letter.
struct PermissibleArc {
  StringWord word;
  IntVector int_vector;
  SegKey start;
  SegKey end;
  std::vector<SegKey> crossings;
  int start_point = 0;
  int end_point = 0;
  TauRigidModule module;
};

struct ArcInventory {
  TilingAlgebra algebra;
  std::vector<PermissibleArc> arcs;
  bool cap_reached = false;
};

/// Segment trace of a string: endpoint configurations and crossed angles.
PermissibleArc trace_string(const TilingComplex& t, const TilingAlgebra& alg, const StringWord& w);

/// Tau-rigid strings of the tiling algebra, complete below the length cap.
ArcInventory enumerate_permissible_arcs(const TilingComplex& t, std::size_t cap);
std::size_t default_arc_cap(const TilingComplex& t);

/// Decided by tau-rigidity of the direct sum.
bool arcs_compatible(const TilingAlgebra& alg, const PermissibleArc& a, const PermissibleArc& b);

/// Sorted (arc index, multiplicity) pairs.
using ArcMultiset = std::vector<std::pair<std::size_t, std::size_t>>;

IntVector intersection_vector(const ArcInventory& inv, const ArcMultiset& m);

struct SegProfile {
  std::map<SegKey, std::size_t> angles;
  std::map<SegKey, std::size_t> endpoints;
  bool operator==(const SegProfile&) const = default;
};

SegProfile seg_profile(const ArcInventory& inv, const ArcMultiset& m);
bool local_global_equal(const ArcInventory& inv, const ArcMultiset& a, const ArcMultiset& b);

/// All multisets of pairwise compatible arcs with total multiplicity
/// 1..mult_cap. compat[i][j] says whether arcs i and j are compatible.
std::vector<ArcMultiset> compatible_multisets(const std::vector<std::vector<bool>>& compat, std::size_t mult_cap);

std::vector<std::vector<bool>> compatibility_matrix(const ArcInventory& inv);

/// For every type I tile: no endpoint configuration inside it and the
/// intersection number with its loop is twice the number of angle crossings.
bool one_loop_property(const TilingComplex& t, const ArcInventory& inv, const ArcMultiset& m);

/// Disc with marked points 1..m anticlockwise and non-crossing chords.
struct DiscTiling {
  int m = 0;
  std::vector<std::pair<int, int>> chords;  // each with first < second
};

bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b);

/// Every non-crossing chord subset, the empty one included.
std::vector<DiscTiling> disc_tilings(int m);

/// Arcs are the chords in the given order (end0 < end1); tiles are the faces.
TilingComplex disc_complex(const DiscTiling& d);

/// Permissible chords found directly from the geometry.
struct GeometricArc {
  int p = 0;
  int q = 0;
  IntVector int_vector;
  SegKey start;
  SegKey end;
  std::vector<SegKey> crossings;
};

std::vector<GeometricArc> geometric_permissible_chords(const DiscTiling& d, const TilingComplex& t);

/// b_ij = #arrows i -> j minus #arrows j -> i in the tiling quiver.
IntMatrix tiling_exchange_matrix(const TilingAlgebra& alg);

/// Flip of chord k in a triangulation: the other diagonal of its quadrilateral
/// takes position k.
DiscTiling flip(const DiscTiling& d, std::size_t k);

/// Annulus with outer marked points 1, 2, 3 and an unmarked inner boundary:
/// a loop at 1 around the hole and an arc from 1 to 2.
TilingComplex golden_annulus();

}  // namespace clusterlab
