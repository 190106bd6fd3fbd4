// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/gentle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace clusterlab {

std::size_t BoundQuiver::add_arrow(std::string id, std::size_t src, std::size_t tgt) {
  if (src >= num_vertices || tgt >= num_vertices) throw std::out_of_range("arrow endpoint out of range");
  if (find_arrow(id)) throw std::invalid_argument("duplicate arrow id '" + id + "'");
  arrows.push_back({std::move(id), src, tgt});
  return arrows.size() - 1;
}

void BoundQuiver::add_relation(std::size_t a, std::size_t b) {
  if (a >= arrows.size() || b >= arrows.size()) throw std::out_of_range("relation arrow out of range");
  if (arrows[a].tgt != arrows[b].src)
    throw std::invalid_argument("relation " + arrows[a].id + " then " + arrows[b].id + " is not composable");
  relations.insert({a, b});
}

std::optional<std::size_t> BoundQuiver::find_arrow(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::size_t> BoundQuiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == v) r.push_back(i);
  return r;
}

std::vector<std::size_t> BoundQuiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].tgt == v) r.push_back(i);
  return r;
}

GentleCheck check_gentle(const BoundQuiver& q) {
  for (std::size_t v = 0; v < q.num_vertices; ++v) {
    if (q.out_arrows(v).size() > 2)
      return {false, "G1", "vertex " + std::to_string(v + 1) + " is the source of more than two arrows"};
    if (q.in_arrows(v).size() > 2)
      return {false, "G1", "vertex " + std::to_string(v + 1) + " is the target of more than two arrows"};
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    std::size_t in_rel = 0, out_rel = 0;
    for (auto b : q.out_arrows(q.arrows[a].tgt)) (q.is_relation(a, b) ? in_rel : out_rel)++;
    if (in_rel > 1) return {false, "G2", "two relations start with " + q.arrows[a].id};
    if (out_rel > 1) return {false, "G2", "two nonzero paths start with " + q.arrows[a].id};
    in_rel = out_rel = 0;
    for (auto b : q.in_arrows(q.arrows[a].src)) (q.is_relation(b, a) ? in_rel : out_rel)++;
    if (in_rel > 1) return {false, "G3", "two relations end with " + q.arrows[a].id};
    if (out_rel > 1) return {false, "G3", "two nonzero paths end with " + q.arrows[a].id};
  }
  for (const auto& [a, b] : q.relations)
    if (q.arrows[a].tgt != q.arrows[b].src)
      return {false, "G4", "relation " + q.arrows[a].id + " then " + q.arrows[b].id + " is not a path"};
  return {};
}

std::vector<std::vector<std::size_t>> full_relation_cycles(const BoundQuiver& q) {
  // Relation successor: a -> b when (a, b) is a relation. Cycles of this map
  // are exactly the cycles with full relations.
  const std::size_t m = q.arrows.size();
  std::vector<std::vector<std::size_t>> succ(m);
  for (const auto& [a, b] : q.relations) succ[a].push_back(b);
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(m, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t a) {
    for (auto b : succ[a]) {
      if (b == root) {
        found.insert(path);
      } else if (b > root && !on_path[b]) {
        on_path[b] = true;
        path.push_back(b);
        dfs(root, b);
        path.pop_back();
        on_path[b] = false;
      }
    }
  };
  for (std::size_t root = 0; root < m; ++root) {
    path = {root};
    on_path[root] = true;
    dfs(root, root);
    on_path[root] = false;
  }
  return {found.begin(), found.end()};
}

std::optional<std::vector<std::size_t>> detect_even_full_cycle(const BoundQuiver& q) {
  for (auto& c : full_relation_cycles(q))
    if (c.size() % 2 == 0) return c;
  return std::nullopt;
}

bool is_finite_dimensional(const BoundQuiver& q) {
  const std::size_t m = q.arrows.size();
  std::vector<std::vector<std::size_t>> succ(m);
  for (std::size_t a = 0; a < m; ++a)
    for (auto b : q.out_arrows(q.arrows[a].tgt))
      if (!q.is_relation(a, b)) succ[a].push_back(b);
  std::vector<int> state(m, 0);
  std::function<bool(std::size_t)> acyclic = [&](std::size_t a) {
    state[a] = 1;
    for (auto b : succ[a]) {
      if (state[b] == 1) return false;
      if (state[b] == 0 && !acyclic(b)) return false;
    }
    state[a] = 2;
    return true;
  };
  for (std::size_t a = 0; a < m; ++a)
    if (state[a] == 0 && !acyclic(a)) return false;
  return true;
}

IntMatrix cartan_matrix(const BoundQuiver& q) {
  const PathTable t(q);
  IntMatrix c(q.num_vertices, q.num_vertices);
  for (const auto& p : t.paths()) ++c(p.end, p.start);
  return c;
}

PathTable::PathTable(const BoundQuiver& q) : q_(q), from_(q.num_vertices), to_(q.num_vertices) {
  const std::size_t bound = q.num_vertices * q.arrows.size() + 1;
  auto add = [&](Path p) {
    const std::size_t id = paths_.size();
    index_.emplace(std::make_pair(p.start, p.arrows), id);
    from_[p.start].push_back(id);
    to_[p.end].push_back(id);
    paths_.push_back(std::move(p));
    return id;
  };
  for (std::size_t v = 0; v < q.num_vertices; ++v) {
    std::vector<std::size_t> layer{add({v, v, {}})};
    while (!layer.empty()) {
      std::vector<std::size_t> next;
      for (auto pid : layer) {
        for (auto a : q.out_arrows(paths_[pid].end)) {
          if (!paths_[pid].arrows.empty() && q.is_relation(paths_[pid].arrows.back(), a)) continue;
          if (paths_[pid].arrows.size() + 1 > bound)
            throw InfiniteDimensional("nonzero paths longer than " + std::to_string(bound) + " arrows");
          Path p = paths_[pid];
          p.arrows.push_back(a);
          p.end = q.arrows[a].tgt;
          next.push_back(add(std::move(p)));
        }
      }
      layer = std::move(next);
    }
  }
}

std::optional<std::size_t> PathTable::extend(std::size_t p, std::size_t a) const {
  const Path& path = paths_[p];
  if (q_.arrows[a].src != path.end) return std::nullopt;
  if (!path.arrows.empty() && q_.is_relation(path.arrows.back(), a)) return std::nullopt;
  std::vector<std::size_t> arrows = path.arrows;
  arrows.push_back(a);
  auto it = index_.find({path.start, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PathTable::prepend(std::size_t a, std::size_t p) const {
  const Path& path = paths_[p];
  if (q_.arrows[a].tgt != path.start) return std::nullopt;
  if (!path.arrows.empty() && q_.is_relation(a, path.arrows.front())) return std::nullopt;
  std::vector<std::size_t> arrows{a};
  arrows.insert(arrows.end(), path.arrows.begin(), path.arrows.end());
  auto it = index_.find({q_.arrows[a].src, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PathTable::strip_suffix(std::size_t x, std::size_t p) const {
  const Path& px = paths_[x];
  const Path& pp = paths_[p];
  if (px.end != pp.end || pp.arrows.size() > px.arrows.size()) return std::nullopt;
  if (!std::equal(pp.arrows.rbegin(), pp.arrows.rend(), px.arrows.rbegin())) return std::nullopt;
  std::vector<std::size_t> prefix(px.arrows.begin(), px.arrows.end() - static_cast<std::ptrdiff_t>(pp.arrows.size()));
  auto it = index_.find({px.start, prefix});
  if (it == index_.end()) return std::nullopt;
  if (paths_[it->second].end != pp.start) return std::nullopt;
  return it->second;
}

namespace {

// Vertex reached after the letter, or nullopt if the letter does not start at v.
std::optional<std::size_t> step(const BoundQuiver& q, std::size_t v, const Letter& l) {
  const Arrow& a = q.arrows[l.arrow];
  if (!l.inverse) return a.src == v ? std::optional(a.tgt) : std::nullopt;
  return a.tgt == v ? std::optional(a.src) : std::nullopt;
}

std::optional<std::string> junction_defect(const BoundQuiver& q, const Letter& x, const Letter& y) {
  if (x.arrow == y.arrow && x.inverse != y.inverse) return "word is not reduced at " + q.arrows[x.arrow].id;
  if (!x.inverse && !y.inverse && q.is_relation(x.arrow, y.arrow))
    return "contains the relation " + q.arrows[x.arrow].id + " then " + q.arrows[y.arrow].id;
  if (x.inverse && y.inverse && q.is_relation(y.arrow, x.arrow))
    return "contains the inverse of the relation " + q.arrows[y.arrow].id + " then " + q.arrows[x.arrow].id;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> string_defect(const BoundQuiver& q, const StringWord& w) {
  if (w.start >= q.num_vertices) return "start vertex out of range";
  std::size_t v = w.start;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].arrow >= q.arrows.size()) return "arrow index out of range";
    auto next = step(q, v, w.letters[i]);
    if (!next) return "letter " + std::to_string(i + 1) + " does not start at vertex " + std::to_string(v + 1);
    if (i > 0)
      if (auto d = junction_defect(q, w.letters[i - 1], w.letters[i])) return d;
    v = *next;
  }
  return std::nullopt;
}

std::vector<std::size_t> walk_vertices(const BoundQuiver& q, const StringWord& w) {
  std::vector<std::size_t> vs{w.start};
  for (const auto& l : w.letters) {
    auto next = step(q, vs.back(), l);
    if (!next) throw std::invalid_argument("letters do not form a walk");
    vs.push_back(*next);
  }
  return vs;
}

StringWord inverse_word(const BoundQuiver& q, const StringWord& w) {
  StringWord r;
  r.start = walk_vertices(q, w).back();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->inverse});
  return r;
}

StringWord canonical_word(const BoundQuiver& q, const StringWord& w) {
  StringWord inv = inverse_word(q, w);
  return inv < w ? inv : w;
}

std::string to_string(const BoundQuiver& q, const StringWord& w) {
  if (w.letters.empty()) return "e" + std::to_string(w.start + 1);
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += q.arrows[w.letters[i].arrow].id;
    if (w.letters[i].inverse) s += "^-1";
  }
  return s;
}

std::size_t QuiverRep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

IntVector QuiverRep::dim_vector() const {
  IntVector v;
  for (auto d : dims) v.push_back(static_cast<std::int64_t>(d));
  return v;
}

bool is_valid_rep(const BoundQuiver& q, const QuiverRep& m) {
  if (m.dims.size() != q.num_vertices || m.maps.size() != q.arrows.size()) return false;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (m.maps[a].rows() != m.dims[q.arrows[a].tgt] || m.maps[a].cols() != m.dims[q.arrows[a].src]) return false;
  for (const auto& [a, b] : q.relations)
    if (!(m.maps[b] * m.maps[a]).is_zero()) return false;
  return true;
}

QuiverRep zero_rep(const BoundQuiver& q) {
  QuiverRep r;
  r.dims.assign(q.num_vertices, 0);
  r.maps.assign(q.arrows.size(), RatMatrix());
  return r;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.dims.size() != b.dims.size() || a.maps.size() != b.maps.size())
    throw std::invalid_argument("direct sum of representations of different quivers");
  QuiverRep r;
  for (std::size_t v = 0; v < a.dims.size(); ++v) r.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const RatMatrix& x = a.maps[k];
    const RatMatrix& y = b.maps[k];
    RatMatrix s(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) s(x.rows() + i, x.cols() + j) = y(i, j);
    r.maps.push_back(std::move(s));
  }
  return r;
}

QuiverRep string_module(const BoundQuiver& q, const StringWord& w) {
  if (auto d = string_defect(q, w)) throw std::invalid_argument("invalid string: " + *d);
  const auto vs = walk_vertices(q, w);
  QuiverRep r;
  r.dims.assign(q.num_vertices, 0);
  std::vector<std::size_t> local;
  for (auto v : vs) local.push_back(r.dims[v]++);
  for (const auto& a : q.arrows) r.maps.emplace_back(r.dims[a.tgt], r.dims[a.src]);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    if (!l.inverse) {
      r.maps[l.arrow](local[i + 1], local[i]) = 1;
    } else {
      r.maps[l.arrow](local[i], local[i + 1]) = 1;
    }
  }
  return r;
}

namespace {

// Paths from `start` grouped by end vertex, with their local index there.
struct Basis {
  std::vector<std::vector<std::size_t>> at;  // at[v] = list of path ids
  std::map<std::size_t, std::size_t> local;  // path id -> index at its vertex
};

}  // namespace

QuiverRep projective_rep(const PathTable& t, std::size_t v) {
  const BoundQuiver& q = t.quiver();
  QuiverRep r;
  r.dims.assign(q.num_vertices, 0);
  std::map<std::size_t, std::size_t> local;
  for (auto p : t.starting_at(v)) local[p] = r.dims[t.paths()[p].end]++;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    RatMatrix m(r.dims[q.arrows[a].tgt], r.dims[q.arrows[a].src]);
    for (auto p : t.starting_at(v)) {
      if (t.paths()[p].end != q.arrows[a].src) continue;
      if (auto e = t.extend(p, a)) m(local[*e], local[p]) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

QuiverRep injective_rep(const PathTable& t, std::size_t v) {
  const BoundQuiver& q = t.quiver();
  QuiverRep r;
  r.dims.assign(q.num_vertices, 0);
  std::map<std::size_t, std::size_t> local;
  for (auto p : t.ending_at(v)) local[p] = r.dims[t.paths()[p].start]++;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    RatMatrix m(r.dims[q.arrows[a].tgt], r.dims[q.arrows[a].src]);
    for (auto x2 : t.ending_at(v)) {
      if (t.paths()[x2].start != q.arrows[a].tgt) continue;
      if (auto x = t.prepend(a, x2)) m(local[x2], local[*x]) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

namespace {

std::vector<mpq_class> apply_path(const BoundQuiver& q, const QuiverRep& m, const PathTable::Path& p,
                                  std::vector<mpq_class> v) {
  for (auto a : p.arrows) {
    const RatMatrix& f = m.maps[a];
    std::vector<mpq_class> w(f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (sgn(f(i, j)) != 0 && sgn(v[j]) != 0) w[i] += f(i, j) * v[j];
    v = std::move(w);
  }
  (void)q;
  return v;
}

RatMatrix path_matrix(const BoundQuiver& q, const QuiverRep& m, const PathTable::Path& p) {
  RatMatrix r = RatMatrix::identity(m.dims[p.start]);
  for (auto a : p.arrows) r = m.maps[a] * r;
  (void)q;
  return r;
}

// Generators of M / rad M at each vertex, as unit-vector indices.
std::vector<std::pair<std::size_t, std::size_t>> top_generators(const BoundQuiver& q, const QuiverRep& m) {
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t v = 0; v < q.num_vertices; ++v) {
    const std::size_t d = m.dims[v];
    if (d == 0) continue;
    RatMatrix span(d, 0);
    for (auto a : q.in_arrows(v))
      if (m.maps[a].cols() > 0) span = hconcat(span, m.maps[a]);
    std::size_t r = rank(span);
    for (std::size_t i = 0; i < d && r < d; ++i) {
      RatMatrix unit(d, 1);
      unit(i, 0) = 1;
      RatMatrix trial = hconcat(span, unit);
      const std::size_t tr = rank(trial);
      if (tr > r) {
        span = std::move(trial);
        r = tr;
        gens.emplace_back(v, i);
      }
    }
  }
  return gens;
}

// Restriction of the arrow maps of `ambient` to subspaces given by basis
// columns sub[v] (each of full column rank).
QuiverRep restrict_to(const BoundQuiver& q, const std::vector<RatMatrix>& ambient_maps,
                      const std::vector<RatMatrix>& sub) {
  QuiverRep r;
  for (std::size_t v = 0; v < q.num_vertices; ++v) r.dims.push_back(sub[v].cols());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t s = q.arrows[a].src, t = q.arrows[a].tgt;
    RatMatrix x(r.dims[t], r.dims[s]);
    if (r.dims[s] > 0 && r.dims[t] > 0) {
      const RatMatrix image = ambient_maps[a] * sub[s];
      if (!solve_full_column_rank(sub[t], image, x))
        throw std::logic_error("subspace is not closed under an arrow map");
    } else if (r.dims[s] > 0 && ambient_maps[a].rows() > 0) {
      if (!(ambient_maps[a] * sub[s]).is_zero()) throw std::logic_error("subspace is not closed under an arrow map");
    }
    r.maps.push_back(std::move(x));
  }
  return r;
}

// Direct sum of projectives with generators at `tops`: basis at v is the list
// of (generator, path) pairs, and the arrow maps extend paths.
struct ProjectiveSum {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> basis;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> local;
  std::vector<RatMatrix> maps;
};

ProjectiveSum projective_sum(const PathTable& t, const std::vector<std::size_t>& tops) {
  const BoundQuiver& q = t.quiver();
  ProjectiveSum p;
  p.basis.resize(q.num_vertices);
  for (std::size_t g = 0; g < tops.size(); ++g)
    for (auto path : t.starting_at(tops[g])) {
      const std::size_t v = t.paths()[path].end;
      p.local[{g, path}] = p.basis[v].size();
      p.basis[v].emplace_back(g, path);
    }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t s = q.arrows[a].src, tg = q.arrows[a].tgt;
    RatMatrix m(p.basis[tg].size(), p.basis[s].size());
    for (std::size_t j = 0; j < p.basis[s].size(); ++j) {
      const auto [g, path] = p.basis[s][j];
      if (auto e = t.extend(path, a)) m(p.local.at({g, *e}), j) = 1;
    }
    p.maps.push_back(std::move(m));
  }
  return p;
}

}  // namespace

ProjectivePresentation minimal_presentation(const PathTable& t, const QuiverRep& m) {
  const BoundQuiver& q = t.quiver();
  ProjectivePresentation pres;
  const auto gens = top_generators(q, m);
  for (const auto& [v, i] : gens) pres.p0_tops.push_back(v);
  const ProjectiveSum p0 = projective_sum(t, pres.p0_tops);

  // Kernel of P0 -> M, vertex by vertex.
  std::vector<RatMatrix> kernel(q.num_vertices);
  for (std::size_t v = 0; v < q.num_vertices; ++v) {
    const auto& basis = p0.basis[v];
    RatMatrix f(m.dims[v], basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto [g, path] = basis[j];
      std::vector<mpq_class> e(m.dims[gens[g].first]);
      e[gens[g].second] = 1;
      const auto image = apply_path(q, m, t.paths()[path], std::move(e));
      for (std::size_t i = 0; i < image.size(); ++i) f(i, j) = image[i];
    }
    kernel[v] = m.dims[v] == 0 ? RatMatrix::identity(basis.size()) : nullspace(f);
  }
  const QuiverRep k = restrict_to(q, p0.maps, kernel);
  for (const auto& [v, i] : top_generators(q, k)) {
    pres.p1_tops.push_back(v);
    std::vector<ProjectivePresentation::Term> terms;
    for (std::size_t r = 0; r < kernel[v].rows(); ++r) {
      const mpq_class& c = kernel[v](r, i);
      if (sgn(c) == 0) continue;
      const auto [g, path] = p0.basis[v][r];
      terms.push_back({g, path, c});
    }
    pres.relations.push_back(std::move(terms));
  }
  return pres;
}

QuiverRep ar_translate(const PathTable& t, const QuiverRep& m) {
  const BoundQuiver& q = t.quiver();
  const ProjectivePresentation pres = minimal_presentation(t, m);
  if (pres.p1_tops.empty()) return zero_rep(q);

  // nu P1 = sum of injectives I_{top h}; basis at u is (h, x) with x a path
  // from u to top h, standing for the dual vector x*.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> src_basis(q.num_vertices), dst_basis(q.num_vertices);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> src_local, dst_local;
  for (std::size_t h = 0; h < pres.p1_tops.size(); ++h)
    for (auto x : t.ending_at(pres.p1_tops[h])) {
      const std::size_t u = t.paths()[x].start;
      src_local[{h, x}] = src_basis[u].size();
      src_basis[u].emplace_back(h, x);
    }
  for (std::size_t g = 0; g < pres.p0_tops.size(); ++g)
    for (auto y : t.ending_at(pres.p0_tops[g])) {
      const std::size_t u = t.paths()[y].start;
      dst_local[{g, y}] = dst_basis[u].size();
      dst_basis[u].emplace_back(g, y);
    }

  std::vector<RatMatrix> kernel(q.num_vertices);
  for (std::size_t u = 0; u < q.num_vertices; ++u) {
    RatMatrix f(dst_basis[u].size(), src_basis[u].size());
    for (std::size_t j = 0; j < src_basis[u].size(); ++j) {
      const auto [h, x] = src_basis[u][j];
      for (const auto& term : pres.relations[h]) {
        // x* maps to y* when x = y then path.
        if (auto y = t.strip_suffix(x, term.path)) f(dst_local.at({term.generator, *y}), j) += term.coeff;
      }
    }
    kernel[u] = dst_basis[u].empty() ? RatMatrix::identity(src_basis[u].size()) : nullspace(f);
  }

  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t s = q.arrows[a].src, tg = q.arrows[a].tgt;
    RatMatrix mat(src_basis[tg].size(), src_basis[s].size());
    for (std::size_t j = 0; j < src_basis[tg].size(); ++j) {
      const auto [h, x2] = src_basis[tg][j];
      if (auto x = t.prepend(a, x2)) mat(j, src_local.at({h, *x})) = 1;
    }
    maps.push_back(std::move(mat));
  }
  return restrict_to(q, maps, kernel);
}

QuiverRep ar_translate(const BoundQuiver& q, const QuiverRep& m) { return ar_translate(PathTable(q), m); }

namespace {

bool small_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j);
      if (v.get_den() != 1 || !v.get_num().fits_sint_p()) return false;
    }
  return true;
}

}  // namespace

std::size_t hom_dim(const BoundQuiver& q, const QuiverRep& m, const QuiverRep& n) {
  std::vector<std::size_t> offset(q.num_vertices + 1, 0);
  for (std::size_t v = 0; v < q.num_vertices; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return 0;
  std::size_t equations = 0;
  for (const auto& a : q.arrows) equations += n.dims[a.tgt] * m.dims[a.src];

  bool integral = true;
  for (std::size_t a = 0; a < q.arrows.size() && integral; ++a)
    integral = small_integral(m.maps[a]) && small_integral(n.maps[a]);

  // Unknown f_v[r][c] (r < n_v, c < m_v) sits at offset[v] + r * m_v + c.
  // Equation for arrow a: s -> t is (N_a f_s - f_t M_a)[r][c] = 0.
  auto fill = [&](auto& sys, auto convert) {
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
      const std::size_t s = q.arrows[ai].src, t = q.arrows[ai].tgt;
      const RatMatrix& na = n.maps[ai];
      const RatMatrix& ma = m.maps[ai];
      for (std::size_t r = 0; r < n.dims[t]; ++r)
        for (std::size_t c = 0; c < m.dims[s]; ++c, ++row) {
          for (std::size_t k = 0; k < n.dims[s]; ++k)
            if (sgn(na(r, k)) != 0) sys(row, offset[s] + k * m.dims[s] + c) += convert(na(r, k));
          for (std::size_t k = 0; k < m.dims[t]; ++k)
            if (sgn(ma(k, c)) != 0) sys(row, offset[t] + r * m.dims[t] + k) -= convert(ma(k, c));
        }
    }
  };
  std::size_t r;
  if (integral) {
    IntMatrix sys(equations, unknowns);
    fill(sys, [](const mpq_class& v) { return static_cast<std::int64_t>(v.get_num().get_si()); });
    r = rank(sys);
  } else {
    RatMatrix sys(equations, unknowns);
    fill(sys, [](const mpq_class& v) { return v; });
    r = rank(sys);
  }
  return unknowns - r;
}

bool presentation_hom_surjective(const PathTable& t, const ProjectivePresentation& p, const QuiverRep& y) {
  const BoundQuiver& q = t.quiver();
  std::vector<std::size_t> col_off{0}, row_off{0};
  for (auto v : p.p0_tops) col_off.push_back(col_off.back() + y.dims[v]);
  for (auto v : p.p1_tops) row_off.push_back(row_off.back() + y.dims[v]);
  if (row_off.back() == 0) return true;
  RatMatrix mat(row_off.back(), col_off.back());
  for (std::size_t h = 0; h < p.p1_tops.size(); ++h)
    for (const auto& term : p.relations[h]) {
      const RatMatrix block = path_matrix(q, y, t.paths()[term.path]);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          mat(row_off[h] + i, col_off[term.generator] + j) += term.coeff * block(i, j);
    }
  return rank(mat) == row_off.back();
}

bool is_tau_rigid(const PathTable& t, const QuiverRep& m) {
  return hom_dim(t.quiver(), m, ar_translate(t, m)) == 0;
}

std::size_t default_string_cap(const BoundQuiver& q) { return 2 * q.arrows.size() + 2; }

TauRigidInventory enumerate_tau_rigid(const BoundQuiver& q, std::size_t cap) {
  TauRigidInventory inv;
  const PathTable table(q);
  std::set<StringWord> canonical;
  std::vector<StringWord> layer;
  for (std::size_t v = 0; v < q.num_vertices; ++v) layer.push_back({v, {}});
  for (std::size_t len = 0; !layer.empty(); ++len) {
    for (const auto& w : layer) canonical.insert(canonical_word(q, w));
    std::vector<StringWord> next;
    for (const auto& w : layer) {
      const std::size_t end = walk_vertices(q, w).back();
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        for (bool inverse : {false, true}) {
          const Letter l{a, inverse};
          if (!step(q, end, l)) continue;
          if (!w.letters.empty() && junction_defect(q, w.letters.back(), l)) continue;
          if (std::find(w.letters.begin(), w.letters.end(), l) != w.letters.end())
            inv.representation_infinite = true;
          StringWord x = w;
          x.letters.push_back(l);
          next.push_back(std::move(x));
        }
    }
    if (len == cap || inv.representation_infinite) {
      inv.cap_reached = !next.empty();
      break;
    }
    layer = std::move(next);
  }
  inv.strings.assign(canonical.begin(), canonical.end());
  std::sort(inv.strings.begin(), inv.strings.end(), [](const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  if (inv.representation_infinite) return inv;
  for (const auto& w : inv.strings) {
    QuiverRep m = string_module(q, w);
    QuiverRep tau = ar_translate(table, m);
    if (hom_dim(q, m, tau) != 0) continue;
    IntVector dim = m.dim_vector();
    inv.rigid.push_back({w, std::move(dim), std::move(m), std::move(tau)});
  }
  return inv;
}

bool compatible(const BoundQuiver& q, const TauRigidModule& a, const TauRigidModule& b) {
  return hom_dim(q, a.module, b.tau) == 0 && hom_dim(q, b.module, a.tau) == 0;
}

std::size_t TauRigidPair::degree() const {
  std::size_t d = 0;
  for (const auto& [i, k] : module) d += k;
  for (const auto& [v, k] : projective_vertices) d += k;
  return d;
}

std::vector<TauRigidPair> enumerate_tau_rigid_pairs(const BoundQuiver& q, const TauRigidInventory& inv,
                                                    std::size_t mult_cap) {
  const std::size_t r = inv.rigid.size();
  std::vector<std::vector<bool>> ok(r, std::vector<bool>(r, true));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) ok[i][j] = ok[j][i] = compatible(q, inv.rigid[i], inv.rigid[j]);

  std::vector<TauRigidPair> out;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  // Projective part: multiset over vertices where the module vanishes.
  auto emit_projectives = [&](std::size_t budget) {
    std::vector<bool> free(q.num_vertices, true);
    for (const auto& [i, mult] : chosen)
      for (std::size_t v = 0; v < q.num_vertices; ++v)
        if (inv.rigid[i].dim[v] != 0) free[v] = false;
    std::vector<std::pair<std::size_t, std::size_t>> proj;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
      if (v == q.num_vertices) {
        TauRigidPair p;
        p.module = chosen;
        p.projective_vertices = proj;
        out.push_back(std::move(p));
        return;
      }
      rec(v + 1, left);
      if (!free[v]) return;
      for (std::size_t k = 1; k <= left; ++k) {
        proj.emplace_back(v, k);
        rec(v + 1, left - k);
        proj.pop_back();
      }
    };
    rec(0, budget);
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    emit_projectives(left);
    for (std::size_t i = start; i < r; ++i) {
      bool fits = true;
      for (const auto& [j, mult] : chosen) fits = fits && ok[i][j];
      if (!fits) continue;
      for (std::size_t k = 1; k <= left; ++k) {
        chosen.emplace_back(i, k);
        rec(i + 1, left - k);
        chosen.pop_back();
      }
    }
  };
  rec(0, mult_cap);
  return out;
}

BoundQuiver type_c_quiver(const ExchangeMatrix& b) {
  const std::size_t n = b.n();
  if (n < 2) throw std::invalid_argument("type C quiver needs rank at least 2");
  IntVector expected(n, 1);
  expected[0] = 2;
  if (b.symmetrizer() != expected) throw std::invalid_argument("skew-symmetrizer must be diag(2, 1, ..., 1)");
  BoundQuiver q;
  q.num_vertices = n;
  const std::size_t rho = q.add_arrow("rho", 0, 0);
  q.add_relation(rho, rho);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto bij = b(i, j);
      if (bij <= 0) continue;
      const std::int64_t count = j == 0 ? bij / 2 : bij;
      for (std::int64_t c = 0; c < count; ++c) {
        std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
        if (c > 0) id += "_" + std::to_string(c + 1);
        q.add_arrow(id, i, j);
      }
    }
  const std::size_t m = q.arrows.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        const Arrow &ax = q.arrows[x], &ay = q.arrows[y], &az = q.arrows[z];
        if (ax.src == ax.tgt || ay.src == ay.tgt || az.src == az.tgt) continue;
        if (ax.tgt != ay.src || ay.tgt != az.src || az.tgt != ax.src) continue;
        q.add_relation(x, y);
        q.add_relation(y, z);
        q.add_relation(z, x);
      }
  return q;
}

QbConditions check_qb_conditions(const BoundQuiver& q) {
  const std::size_t n = q.num_vertices;
  std::vector<std::vector<std::size_t>> edges(n, std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> loops;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (ar.src == ar.tgt) {
      loops.push_back(a);
      continue;
    }
    ++edges[ar.src][ar.tgt];
    ++edges[ar.tgt][ar.src];
  }
  auto adjacent = [&](std::size_t i, std::size_t j) { return edges[i][j] > 0; };

  // Oriented triangles as arrow triples.
  std::vector<std::array<std::size_t, 3>> triangles;
  for (std::size_t x = 0; x < q.arrows.size(); ++x)
    for (std::size_t y = 0; y < q.arrows.size(); ++y)
      for (std::size_t z = 0; z < q.arrows.size(); ++z) {
        const auto &ax = q.arrows[x], &ay = q.arrows[y], &az = q.arrows[z];
        if (ax.src == ax.tgt || ay.src == ay.tgt || az.src == az.tgt) continue;
        if (ax.tgt == ay.src && ay.tgt == az.src && az.tgt == ax.src && x < y && x < z)
          triangles.push_back({x, y, z});
      }
  auto in_triangle = [&](std::size_t a) {
    for (const auto& t : triangles)
      if (t[0] == a || t[1] == a || t[2] == a) return true;
    return false;
  };

  QbConditions c;
  // (a): no doubled edges, every chordless cycle is an oriented triangle.
  c.a = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edges[i][j] > 1) c.a = false;
  if (c.a) {
    std::vector<std::size_t> path;
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
      for (std::size_t w = 0; w < n && c.a; ++w) {
        if (!adjacent(v, w)) continue;
        if (w == path.front() && path.size() >= 3) {
          bool chordless = true;
          for (std::size_t i = 0; i < path.size() && chordless; ++i)
            for (std::size_t j = i + 2; j < path.size(); ++j) {
              if (i == 0 && j == path.size() - 1) continue;
              if (adjacent(path[i], path[j])) chordless = false;
            }
          if (!chordless) continue;
          if (path.size() > 3) {
            c.a = false;
          } else {
            auto has = [&](std::size_t s, std::size_t t) {
              return std::any_of(q.arrows.begin(), q.arrows.end(),
                                 [&](const Arrow& ar) { return ar.src == s && ar.tgt == t; });
            };
            const bool forward = has(path[0], path[1]) && has(path[1], path[2]) && has(path[2], path[0]);
            const bool backward = has(path[1], path[0]) && has(path[2], path[1]) && has(path[0], path[2]);
            if (!forward && !backward) c.a = false;
          }
        } else if (w > path.front() && !used[w]) {
          used[w] = true;
          path.push_back(w);
          dfs(w);
          path.pop_back();
          used[w] = false;
        }
      }
    };
    for (std::size_t s = 0; s < n && c.a; ++s) {
      path = {s};
      used.assign(n, false);
      used[s] = true;
      dfs(s);
    }
  }

  std::vector<std::size_t> neighbours(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) neighbours[i] += adjacent(i, j) ? 1 : 0;

  c.b = std::all_of(neighbours.begin(), neighbours.end(), [](std::size_t k) { return k <= 4; });

  auto triangles_at = [&](std::size_t v) {
    std::vector<std::array<std::size_t, 3>> r;
    for (const auto& t : triangles)
      for (auto a : t)
        if (q.arrows[a].src == v) r.push_back(t);
    return r;
  };
  auto arrows_at = [&](std::size_t v) {
    std::vector<std::size_t> r;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& ar = q.arrows[a];
      if (ar.src != ar.tgt && (ar.src == v || ar.tgt == v)) r.push_back(a);
    }
    return r;
  };

  c.c = true;
  c.d = true;
  for (std::size_t v = 0; v < n; ++v) {
    const auto ts = triangles_at(v);
    const auto as = arrows_at(v);
    if (neighbours[v] == 4) {
      std::set<std::size_t> covered;
      for (const auto& t : ts)
        for (auto a : t)
          if (std::find(as.begin(), as.end(), a) != as.end()) covered.insert(a);
      if (ts.size() != 2 || covered.size() != 4 || as.size() != 4) c.c = false;
    } else if (neighbours[v] == 3) {
      if (ts.size() != 1 || as.size() != 3) {
        c.d = false;
        continue;
      }
      for (auto a : as) {
        const auto& t = ts.front();
        const bool in_this = t[0] == a || t[1] == a || t[2] == a;
        if (!in_this && in_triangle(a)) c.d = false;
      }
    }
  }

  c.e = loops.size() == 1 && q.arrows[loops.front()].src == 0 &&
        (neighbours[0] == 1 || (neighbours[0] == 2 && !triangles_at(0).empty()));
  return c;
}

}  // namespace clusterlab
