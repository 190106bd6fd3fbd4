// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/tiling.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace clusterlab {

std::string to_string(TileType t) {
  switch (t) {
    case TileType::I: return "I";
    case TileType::II: return "II";
    case TileType::III: return "III";
    case TileType::IV: return "IV";
    case TileType::V: return "V";
  }
  return "?";
}

int TilingComplex::side_start(std::size_t tile, std::size_t side) const {
  const TilingSide& s = tiles.at(tile).sides.at(side);
  if (s.boundary) return s.from;
  const TilingArc& a = arcs.at(s.arc);
  return s.reversed ? a.end1 : a.end0;
}

int TilingComplex::side_end(std::size_t tile, std::size_t side) const {
  const TilingSide& s = tiles.at(tile).sides.at(side);
  if (s.boundary) return s.to;
  const TilingArc& a = arcs.at(s.arc);
  return s.reversed ? a.end0 : a.end1;
}

std::vector<std::pair<std::size_t, std::size_t>> TilingComplex::slots(std::size_t arc) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < tiles.size(); ++t)
    for (std::size_t k = 0; k < tiles[t].sides.size(); ++k)
      if (!tiles[t].sides[k].boundary && tiles[t].sides[k].arc == arc) out.emplace_back(t, k);
  return out;
}

void TilingComplex::validate() const {
  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const auto& sides = tiles[t].sides;
    if (sides.empty()) throw std::invalid_argument("tile " + std::to_string(t + 1) + " has no sides");
    for (std::size_t k = 0; k < sides.size(); ++k) {
      if (!sides[k].boundary && sides[k].arc >= arcs.size())
        throw std::invalid_argument("tile " + std::to_string(t + 1) + " refers to an unknown arc");
      if (side_end(t, k) != side_start(t, (k + 1) % sides.size()))
        throw std::invalid_argument("sides of tile " + std::to_string(t + 1) + " do not chain up");
    }
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto s = slots(a);
    if (s.size() != 2) throw std::invalid_argument("arc " + arcs[a].id + " must border exactly two slots");
    if (tiles[s[0].first].sides[s[0].second].reversed == tiles[s[1].first].sides[s[1].second].reversed)
      throw std::invalid_argument("arc " + arcs[a].id + " is traversed the same way on both sides");
  }
}

namespace {

std::optional<TileType> infer_type(const Tile& t) {
  std::size_t b = 0;
  for (const auto& s : t.sides) b += s.boundary ? 1 : 0;
  const std::size_t m = t.sides.size();
  const std::size_t a = m - b;
  if (t.unmarked == 1) {
    if (m == 1 && a == 1) return TileType::I;
    if (m == 2 && a == 2) return TileType::II;
    return std::nullopt;
  }
  if (t.unmarked != 0 || m < 3) return std::nullopt;
  if (m == 3 && b == 2) return TileType::III;
  if (b == 1) return TileType::IV;
  if (b == 0) return TileType::V;
  return std::nullopt;
}

}  // namespace

std::vector<TileType> classify_tiles(const TilingComplex& t) {
  std::vector<TileType> out;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto ty = infer_type(t.tiles[i]);
    if (!ty) throw UnclassifiableTile("tile " + std::to_string(i + 1) + " matches no tile type");
    if (t.tiles[i].declared && *t.tiles[i].declared != *ty)
      throw UnclassifiableTile("tile " + std::to_string(i + 1) + " is declared " + to_string(*t.tiles[i].declared) +
                               " but has the shape of type " + to_string(*ty));
    out.push_back(*ty);
  }
  return out;
}

bool is_classifiable(const TilingComplex& t) {
  try {
    classify_tiles(t);
    return true;
  } catch (const UnclassifiableTile&) {
    return false;
  }
}

bool forbidden_tile_scan(const TilingComplex& t) {
  const auto types = classify_tiles(t);
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i] == TileType::II) return false;
    if (types[i] == TileType::V && t.tiles[i].sides.size() % 2 == 0) return false;
  }
  return true;
}

TilingAlgebra tiling_algebra(const TilingComplex& t) {
  TilingAlgebra alg;
  alg.quiver.num_vertices = t.arcs.size();
  // Half-edge (arc, end) at which each arrow starts and ends.
  std::vector<std::pair<std::size_t, int>> src_half, tgt_half;
  std::set<std::string> names;
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& sides = t.tiles[ti].sides;
    const std::size_t m = sides.size();
    for (std::size_t k = 0; k < m; ++k) {
      const TilingSide& out = sides[k];
      const TilingSide& in = sides[(k + m - 1) % m];
      if (out.boundary || in.boundary) continue;
      std::string name = t.arcs[out.arc].id + "_" + t.arcs[in.arc].id;
      while (!names.insert(name).second) name += "'";
      alg.quiver.add_arrow(name, out.arc, in.arc);
      alg.arrow_corner.emplace_back(ti, k);
      src_half.emplace_back(out.arc, out.reversed ? 1 : 0);
      tgt_half.emplace_back(in.arc, in.reversed ? 0 : 1);
    }
  }
  const auto& arrows = alg.quiver.arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    for (std::size_t b = 0; b < arrows.size(); ++b)
      if (arrows[a].tgt == arrows[b].src && tgt_half[a] != src_half[b]) alg.quiver.add_relation(a, b);
  return alg;
}

namespace {

std::pair<std::size_t, std::size_t> other_slot(const TilingComplex& t, std::size_t arc,
                                               std::pair<std::size_t, std::size_t> slot) {
  const auto s = t.slots(arc);
  if (s.size() != 2) throw std::invalid_argument("arc " + t.arcs.at(arc).id + " must border exactly two slots");
  return s[0] == slot ? s[1] : s[0];
}

// Endpoint configuration of the segment that ends on `slot` from inside its tile.
SegKey endpoint_at(const TilingComplex& t, std::pair<std::size_t, std::size_t> slot) {
  const std::size_t m = t.tiles[slot.first].sides.size();
  return {slot.first, (slot.second + m - 1) % m};
}

// Slot of the first arc of a letter (first = true) or of its last arc.
std::pair<std::size_t, std::size_t> letter_slot(const TilingComplex& t, const TilingAlgebra& alg, const Letter& l,
                                                bool first) {
  const auto [ti, k] = alg.arrow_corner[l.arrow];
  const std::size_t m = t.tiles[ti].sides.size();
  const std::size_t out_side = k, in_side = (k + m - 1) % m;
  // A direct letter walks from the side-k arc to the side-(k-1) arc.
  if (first) return {ti, l.inverse ? in_side : out_side};
  return {ti, l.inverse ? out_side : in_side};
}

}  // namespace

PermissibleArc trace_string(const TilingComplex& t, const TilingAlgebra& alg, const StringWord& w) {
  const BoundQuiver& q = alg.quiver;
  if (auto defect = string_defect(q, w)) throw std::invalid_argument("not a string: " + *defect);
  PermissibleArc arc;
  arc.word = w;
  const auto walk = walk_vertices(q, w);
  arc.int_vector.assign(q.num_vertices, 0);
  for (auto v : walk) ++arc.int_vector[v];
  std::pair<std::size_t, std::size_t> first, last;
  if (w.letters.empty()) {
    const auto s = t.slots(w.start);
    if (s.size() != 2) throw std::invalid_argument("arc " + t.arcs.at(w.start).id + " must border exactly two slots");
    first = s[0];
    last = s[1];
  } else {
    first = other_slot(t, walk.front(), letter_slot(t, alg, w.letters.front(), true));
    last = other_slot(t, walk.back(), letter_slot(t, alg, w.letters.back(), false));
    for (const auto& l : w.letters) {
      const auto [ti, k] = alg.arrow_corner[l.arrow];
      arc.crossings.push_back({ti, k});
    }
  }
  arc.start = endpoint_at(t, first);
  arc.end = endpoint_at(t, last);
  arc.start_point = t.side_start(arc.start.tile, arc.start.index);
  arc.end_point = t.side_start(arc.end.tile, arc.end.index);
  return arc;
}

std::size_t default_arc_cap(const TilingComplex& t) { return default_string_cap(tiling_algebra(t).quiver); }

ArcInventory enumerate_permissible_arcs(const TilingComplex& t, std::size_t cap) {
  t.validate();
  ArcInventory inv;
  inv.algebra = tiling_algebra(t);
  const auto rigid = enumerate_tau_rigid(inv.algebra.quiver, cap);
  inv.cap_reached = rigid.cap_reached;
  for (const auto& m : rigid.rigid) {
    PermissibleArc a = trace_string(t, inv.algebra, m.word);
    a.module = m;
    inv.arcs.push_back(std::move(a));
  }
  return inv;
}

bool arcs_compatible(const TilingAlgebra& alg, const PermissibleArc& a, const PermissibleArc& b) {
  return compatible(alg.quiver, a.module, b.module);
}

IntVector intersection_vector(const ArcInventory& inv, const ArcMultiset& m) {
  IntVector v(inv.algebra.quiver.num_vertices, 0);
  for (const auto& [idx, mult] : m)
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += static_cast<std::int64_t>(mult) * inv.arcs.at(idx).int_vector[i];
  return v;
}

SegProfile seg_profile(const ArcInventory& inv, const ArcMultiset& m) {
  SegProfile p;
  for (const auto& [idx, mult] : m) {
    const PermissibleArc& a = inv.arcs.at(idx);
    p.endpoints[a.start] += mult;
    p.endpoints[a.end] += mult;
    for (const auto& c : a.crossings) p.angles[c] += mult;
  }
  return p;
}

bool local_global_equal(const ArcInventory& inv, const ArcMultiset& a, const ArcMultiset& b) {
  return seg_profile(inv, a) == seg_profile(inv, b);
}

std::vector<std::vector<bool>> compatibility_matrix(const ArcInventory& inv) {
  const std::size_t n = inv.arcs.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c[i][j] = c[j][i] = arcs_compatible(inv.algebra, inv.arcs[i], inv.arcs[j]);
  return c;
}

std::vector<ArcMultiset> compatible_multisets(const std::vector<std::vector<bool>>& compat, std::size_t mult_cap) {
  std::vector<ArcMultiset> out;
  ArcMultiset cur;
  const std::size_t n = compat.size();
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t used) {
    for (std::size_t i = from; i < n; ++i) {
      if (!compat[i][i]) continue;
      bool ok = true;
      for (const auto& [j, _] : cur) ok = ok && compat[i][j];
      if (!ok) continue;
      for (std::size_t mult = 1; used + mult <= mult_cap; ++mult) {
        cur.emplace_back(i, mult);
        out.push_back(cur);
        rec(i + 1, used + mult);
        cur.pop_back();
      }
    }
  };
  rec(0, 0);
  return out;
}

bool one_loop_property(const TilingComplex& t, const ArcInventory& inv, const ArcMultiset& m) {
  const auto types = classify_tiles(t);
  const SegProfile p = seg_profile(inv, m);
  const IntVector v = intersection_vector(inv, m);
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    if (types[ti] != TileType::I) continue;
    const SegKey key{ti, 0};
    if (p.endpoints.count(key)) return false;
    const auto angles = p.angles.count(key) ? p.angles.at(key) : 0;
    if (v[t.tiles[ti].sides[0].arc] != 2 * static_cast<std::int64_t>(angles)) return false;
  }
  return true;
}

bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  return inside(b.first) != inside(b.second);
}

std::vector<DiscTiling> disc_tilings(int m) {
  if (m < 4) throw std::invalid_argument("a disc needs at least four marked points");
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      if (!(i == 1 && j == m)) all.emplace_back(i, j);
  std::vector<DiscTiling> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back({m, cur});
    for (std::size_t c = from; c < all.size(); ++c) {
      bool ok = true;
      for (const auto& x : cur) ok = ok && !chords_interleave(x, all[c]);
      if (!ok) continue;
      cur.push_back(all[c]);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

TilingComplex disc_complex(const DiscTiling& d) {
  const int m = d.m;
  TilingComplex t;
  std::map<std::pair<int, int>, std::size_t> chord_index;
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    auto [a, b] = d.chords[i];
    if (a > b) std::swap(a, b);
    t.arcs.push_back({"{" + std::to_string(a) + "," + std::to_string(b) + "}", a, b});
    chord_index[{a, b}] = i;
  }
  auto next_point = [m](int v) { return v % m + 1; };
  auto prev_point = [m](int v) { return (v + m - 2) % m + 1; };
  std::vector<std::vector<int>> nbrs(m + 1);
  for (int v = 1; v <= m; ++v) {
    nbrs[v].push_back(next_point(v));
    nbrs[v].push_back(prev_point(v));
  }
  for (const auto& arc : t.arcs) {
    nbrs[arc.end0].push_back(arc.end1);
    nbrs[arc.end1].push_back(arc.end0);
  }
  for (int v = 1; v <= m; ++v)
    std::sort(nbrs[v].begin(), nbrs[v].end(), [&](int x, int y) { return (x - v + m) % m < (y - v + m) % m; });

  std::set<std::pair<int, int>> visited;
  std::vector<std::pair<int, int>> starts;
  for (int v = 1; v <= m; ++v) starts.emplace_back(v, next_point(v));
  for (const auto& arc : t.arcs) {
    starts.emplace_back(arc.end0, arc.end1);
    starts.emplace_back(arc.end1, arc.end0);
  }
  for (auto e : starts) {
    if (visited.count(e)) continue;
    Tile tile;
    while (visited.insert(e).second) {
      const auto [u, v] = e;
      TilingSide s;
      if (v == next_point(u)) {
        s.boundary = true;
        s.from = u;
        s.to = v;
      } else {
        s.arc = chord_index.at({std::min(u, v), std::max(u, v)});
        s.reversed = u > v;
      }
      tile.sides.push_back(s);
      const auto& around = nbrs[v];
      const auto pos = std::find(around.begin(), around.end(), u) - around.begin();
      e = {v, around[(pos + around.size() - 1) % around.size()]};
    }
    t.tiles.push_back(std::move(tile));
  }
  return t;
}

namespace {

std::vector<int> tile_points(const TilingComplex& t, std::size_t ti) {
  std::vector<int> v;
  for (std::size_t k = 0; k < t.tiles[ti].sides.size(); ++k) v.push_back(t.side_start(ti, k));
  return v;
}

std::optional<std::size_t> point_position(const std::vector<int>& pts, int p) {
  const auto it = std::find(pts.begin(), pts.end(), p);
  if (it == pts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pts.begin());
}

// Endpoint p enters tile ti and first meets arc c: permissible iff c is the
// side right after the vertex following p.
std::optional<SegKey> endpoint_config(const TilingComplex& t, std::size_t ti, int p, std::size_t c) {
  const auto pts = tile_points(t, ti);
  const auto pos = point_position(pts, p);
  if (!pos) return std::nullopt;
  const auto& side = t.tiles[ti].sides[(*pos + 1) % pts.size()];
  if (side.boundary || side.arc != c) return std::nullopt;
  return SegKey{ti, *pos};
}

}  // namespace

std::vector<GeometricArc> geometric_permissible_chords(const DiscTiling& d, const TilingComplex& t) {
  const int m = d.m;
  std::vector<GeometricArc> out;
  std::set<std::pair<int, int>> in_t(d.chords.begin(), d.chords.end());
  for (int p = 1; p <= m; ++p)
    for (int q = p + 2; q <= m; ++q) {
      if ((p == 1 && q == m) || in_t.count({p, q})) continue;
      std::vector<std::size_t> crossed;
      for (std::size_t c = 0; c < t.arcs.size(); ++c)
        if (chords_interleave({p, q}, {t.arcs[c].end0, t.arcs[c].end1})) crossed.push_back(c);
      if (crossed.empty()) continue;
      auto p_side = [&](std::size_t c) {
        const int a = t.arcs[c].end0, b = t.arcs[c].end1;
        return (a < p && p < b) ? b - a - 1 : m - (b - a + 1);
      };
      std::sort(crossed.begin(), crossed.end(), [&](auto x, auto y) { return p_side(x) < p_side(y); });

      auto tile_with_point = [&](std::size_t c, int point) -> std::optional<std::size_t> {
        for (auto [ti, _] : t.slots(c))
          if (point_position(tile_points(t, ti), point)) return ti;
        return std::nullopt;
      };
      GeometricArc g{p, q, IntVector(t.arcs.size(), 0), {}, {}, {}};
      for (auto c : crossed) g.int_vector[c] = 1;
      const auto t_first = tile_with_point(crossed.front(), p);
      const auto t_last = tile_with_point(crossed.back(), q);
      if (!t_first || !t_last) continue;
      const auto s = endpoint_config(t, *t_first, p, crossed.front());
      const auto e = endpoint_config(t, *t_last, q, crossed.back());
      if (!s || !e) continue;
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < crossed.size(); ++i) {
        const auto& x = t.arcs[crossed[i]];
        const auto& y = t.arcs[crossed[i + 1]];
        int shared = 0;
        for (int u : {x.end0, x.end1})
          if (u == y.end0 || u == y.end1) shared = u;
        if (shared == 0) {
          ok = false;
          break;
        }
        std::optional<std::size_t> tile;
        for (auto [tx, _] : t.slots(crossed[i]))
          for (auto [ty, __] : t.slots(crossed[i + 1]))
            if (tx == ty) tile = tx;
        if (!tile) throw std::logic_error("consecutive crossed chords share no tile");
        g.crossings.push_back({*tile, *point_position(tile_points(t, *tile), shared)});
      }
      if (!ok) continue;
      g.start = *s;
      g.end = *e;
      out.push_back(std::move(g));
    }
  return out;
}

IntMatrix tiling_exchange_matrix(const TilingAlgebra& alg) {
  const std::size_t n = alg.quiver.num_vertices;
  IntMatrix b(n, n);
  for (const auto& a : alg.quiver.arrows) {
    if (a.src == a.tgt) throw std::invalid_argument("a quiver with loops has no skew-symmetric exchange matrix");
    b(a.src, a.tgt) += 1;
    b(a.tgt, a.src) -= 1;
  }
  return b;
}

DiscTiling flip(const DiscTiling& d, std::size_t k) {
  const TilingComplex t = disc_complex(d);
  if (k >= t.arcs.size()) throw std::out_of_range("no chord with that index");
  std::vector<int> apex;
  for (auto [ti, _] : t.slots(k)) {
    const auto pts = tile_points(t, ti);
    if (pts.size() != 3) throw std::invalid_argument("flips need a triangulation");
    for (int v : pts)
      if (v != t.arcs[k].end0 && v != t.arcs[k].end1) apex.push_back(v);
  }
  DiscTiling out = d;
  out.chords[k] = {std::min(apex[0], apex[1]), std::max(apex[0], apex[1])};
  return out;
}

TilingComplex golden_annulus() {
  TilingComplex t;
  t.arcs = {{"l", 1, 1}, {"d", 1, 2}};
  Tile loop;
  loop.unmarked = 1;
  loop.declared = TileType::I;
  loop.sides = {{false, 0, false, 0, 0}};
  Tile middle;
  middle.declared = TileType::IV;
  middle.sides = {{true, 0, false, 1, 2}, {false, 1, true, 0, 0}, {false, 0, true, 0, 0}};
  Tile outer;
  outer.declared = TileType::III;
  outer.sides = {{true, 0, false, 2, 3}, {true, 0, false, 3, 1}, {false, 1, false, 0, 0}};
  t.tiles = {loop, middle, outer};
  return t;
}

}  // namespace clusterlab
