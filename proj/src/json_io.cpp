// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/json_io.hpp"

#include <fstream>
#include <map>

namespace clusterlab {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("bad value for ") + what);
  }
}

std::optional<TileType> parse_tile_type(const std::string& s) {
  for (TileType t : {TileType::I, TileType::II, TileType::III, TileType::IV, TileType::V})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

}  // namespace

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

json to_json(std::span<const std::int64_t> v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

ExchangeMatrix exchange_matrix_from_json(const json& j) {
  const auto rows = get_as<std::vector<std::vector<std::int64_t>>>(field(j, "B"), "B");
  const std::size_t n = rows.size();
  if (j.contains("n") && get_as<std::size_t>(j.at("n"), "n") != n) throw FormatError("\"n\" does not match B");
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw FormatError("B must be square");
    for (std::size_t k = 0; k < n; ++k) b(i, k) = rows[i][k];
  }
  return ExchangeMatrix(b);
}

json exchange_matrix_to_json(const ExchangeMatrix& b) { return {{"n", b.n()}, {"B", to_json(b.b())}}; }

BoundQuiver quiver_from_json(const json& j) {
  BoundQuiver q;
  q.num_vertices = get_as<std::size_t>(field(j, "vertices"), "vertices");
  for (const auto& a : field(j, "arrows")) {
    const auto id = get_as<std::string>(field(a, "id"), "arrow id");
    const auto src = get_as<std::size_t>(field(a, "src"), "src");
    const auto tgt = get_as<std::size_t>(field(a, "tgt"), "tgt");
    if (src < 1 || src > q.num_vertices || tgt < 1 || tgt > q.num_vertices)
      throw FormatError("arrow " + id + " has an endpoint outside 1..vertices");
    if (q.find_arrow(id)) throw FormatError("duplicate arrow id " + id);
    q.add_arrow(id, src - 1, tgt - 1);
  }
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      const auto pair = get_as<std::vector<std::string>>(r, "relation");
      if (pair.size() != 2) throw FormatError("relations are pairs of arrow ids");
      const auto a = q.find_arrow(pair[0]);
      const auto b = q.find_arrow(pair[1]);
      if (!a || !b) throw FormatError("relation names an unknown arrow");
      if (q.arrows[*a].tgt != q.arrows[*b].src) throw FormatError(pair[0] + " then " + pair[1] + " is not a path");
      q.add_relation(*a, *b);
    }
  return q;
}

json quiver_to_json(const BoundQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"id", a.id}, {"src", a.src + 1}, {"tgt", a.tgt + 1}});
  json rels = json::array();
  for (const auto& [a, b] : q.relations) rels.push_back({q.arrows[a].id, q.arrows[b].id});
  return {{"vertices", q.num_vertices}, {"arrows", arrows}, {"relations", rels}};
}

DiscTiling disc_from_json(const json& j) {
  DiscTiling d;
  d.m = get_as<int>(field(j, "marked"), "marked");
  if (d.m < 4) throw FormatError("a disc needs at least four marked points");
  for (const auto& c : field(j, "chords")) {
    auto [a, b] = get_as<std::pair<int, int>>(c, "chord");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > d.m || b - a < 2 || (a == 1 && b == d.m))
      throw FormatError("chord {" + std::to_string(a) + "," + std::to_string(b) + "} is not a diagonal");
    for (const auto& x : d.chords)
      if (x == std::pair{a, b} || chords_interleave(x, {a, b})) throw FormatError("chords must be distinct and non-crossing");
    d.chords.emplace_back(a, b);
  }
  return d;
}

json disc_to_json(const DiscTiling& d) {
  json chords = json::array();
  for (const auto& [a, b] : d.chords) chords.push_back({a, b});
  return {{"surface", "disc"}, {"marked", d.m}, {"chords", chords}};
}

TilingComplex tiling_from_json(const json& j) {
  const auto surface = j.contains("surface") ? get_as<std::string>(j.at("surface"), "surface") : "general";
  if (surface == "disc") return disc_complex(disc_from_json(j));
  if (surface != "general") throw FormatError("unknown surface \"" + surface + "\"");
  TilingComplex t;
  std::map<std::string, std::size_t> index;
  for (const auto& a : field(j, "arcs")) {
    const auto id = get_as<std::string>(field(a, "id"), "arc id");
    const auto ends = get_as<std::pair<int, int>>(field(a, "ends"), "arc ends");
    if (!index.emplace(id, t.arcs.size()).second) throw FormatError("duplicate arc id " + id);
    t.arcs.push_back({id, ends.first, ends.second});
  }
  for (const auto& tj : field(j, "tiles")) {
    Tile tile;
    if (tj.contains("unmarked")) tile.unmarked = get_as<std::size_t>(tj.at("unmarked"), "unmarked");
    if (tj.contains("type")) {
      tile.declared = parse_tile_type(get_as<std::string>(tj.at("type"), "type"));
      if (!tile.declared) throw FormatError("unknown tile type");
    }
    for (const auto& sj : field(tj, "sides")) {
      TilingSide s;
      if (sj.contains("boundary")) {
        s.boundary = true;
        std::tie(s.from, s.to) = get_as<std::pair<int, int>>(sj.at("boundary"), "boundary side");
      } else {
        const auto id = get_as<std::string>(field(sj, "arc"), "side arc");
        const auto it = index.find(id);
        if (it == index.end()) throw FormatError("side refers to unknown arc " + id);
        s.arc = it->second;
        if (sj.contains("reversed")) s.reversed = get_as<bool>(sj.at("reversed"), "reversed");
      }
      tile.sides.push_back(s);
    }
    t.tiles.push_back(std::move(tile));
  }
  t.validate();
  return t;
}

json tiling_to_json(const TilingComplex& t) {
  json arcs = json::array();
  for (const auto& a : t.arcs) arcs.push_back({{"id", a.id}, {"ends", {a.end0, a.end1}}});
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    json sides = json::array();
    for (const auto& s : tile.sides) {
      if (s.boundary)
        sides.push_back({{"boundary", {s.from, s.to}}});
      else
        sides.push_back({{"arc", t.arcs[s.arc].id}, {"reversed", s.reversed}});
    }
    json tj{{"unmarked", tile.unmarked}, {"sides", sides}};
    if (tile.declared) tj["type"] = to_string(*tile.declared);
    tiles.push_back(tj);
  }
  return {{"surface", "general"}, {"arcs", arcs}, {"tiles", tiles}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace clusterlab
