// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/explorer.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace clusterlab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t intern(ExchangeGraph& g, const LaurentPoly& p) {
  auto [it, inserted] = g.variable_index.try_emplace(p, g.variables.size());
  if (inserted) g.variables.push_back(p);
  return it->second;
}

}  // namespace

ExchangeGraph explore(const ExchangeMatrix& b, std::size_t max_seeds, ExploreOrder order) {
  if (max_seeds == 0) throw std::invalid_argument("max_seeds must be positive");
  ExchangeGraph g;
  g.n = b.n();
  g.root_matrix = b;
  std::map<std::vector<std::size_t>, std::size_t> vertex_of;

  auto add_vertex = [&](TrackedSeed seed) {
    ExchangeGraph::Vertex v;
    for (const auto& x : seed.seed.cluster) v.labeled.push_back(intern(g, x));
    v.variables = v.labeled;
    std::sort(v.variables.begin(), v.variables.end());
    v.neighbors.assign(g.n, kNone);
    v.seed = std::make_shared<const TrackedSeed>(std::move(seed));
    vertex_of.emplace(v.variables, g.vertices.size());
    g.vertices.push_back(std::move(v));
    return g.vertices.size() - 1;
  };

  std::deque<std::size_t> frontier{add_vertex(TrackedSeed::root(b))};
  bool truncated = false;
  while (!frontier.empty()) {
    std::size_t cur;
    if (order == ExploreOrder::breadth_first) {
      cur = frontier.front();
      frontier.pop_front();
    } else {
      cur = frontier.back();
      frontier.pop_back();
    }
    for (std::size_t k = 0; k < g.n; ++k) {
      if (g.vertices[cur].neighbors[k] != kNone) continue;
      const std::shared_ptr<const TrackedSeed> here = g.vertices[cur].seed;
      TrackedSeed next = mutate_tracked(*here, k);
      std::vector<std::size_t> ids = g.vertices[cur].labeled;
      ids[k] = intern(g, next.seed.cluster[k]);
      std::sort(ids.begin(), ids.end());
      std::size_t target;
      if (auto it = vertex_of.find(ids); it != vertex_of.end()) {
        target = it->second;
      } else if (g.vertices.size() >= max_seeds) {
        truncated = true;
        continue;
      } else {
        target = add_vertex(std::move(next));
        frontier.push_back(target);
      }
      g.vertices[cur].neighbors[k] = target;
    }
  }
  g.complete = !truncated;
  return g;
}

std::vector<MonomialVectors> variable_vectors(const ExchangeGraph& g) {
  std::vector<MonomialVectors> out(g.num_variables());
  std::vector<bool> done(g.num_variables(), false);
  for (const auto& v : g.vertices) {
    const TrackedSeed& t = *v.seed;
    const IntMatrix d = d_matrix(t);
    const IntMatrix fb = fbar_matrix(t);
    for (std::size_t j = 0; j < g.n; ++j) {
      const std::size_t id = v.labeled[j];
      if (done[id]) continue;
      done[id] = true;
      out[id] = {d.column(j), t.g.column(j), t.f.column(j), fb.column(j)};
    }
  }
  return out;
}

std::size_t ClusterMonomial::degree() const {
  std::size_t d = 0;
  for (const auto& [id, e] : factors) d += static_cast<std::size_t>(e);
  return d;
}

std::vector<ClusterMonomial> enumerate_monomials(const ExchangeGraph& g, std::size_t degree_cap) {
  std::vector<ClusterMonomial> out;
  if (degree_cap == 0) return out;
  std::set<std::vector<std::pair<std::size_t, std::int64_t>>> seen;
  const std::size_t n = g.n;
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
    const auto& vars = g.vertices[vi].variables;
    std::vector<std::int64_t> e(n, 0);
    // Odometer over exponent vectors with total degree <= cap.
    while (true) {
      std::size_t pos = 0;
      std::int64_t total = 0;
      for (auto x : e) total += x;
      while (pos < n) {
        if (total + 1 <= static_cast<std::int64_t>(degree_cap)) {
          ++e[pos];
          break;
        }
        total -= e[pos];
        e[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
      ClusterMonomial m;
      m.vertex = vi;
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] > 0) m.factors.emplace_back(vars[j], e[j]);
      if (seen.insert(m.factors).second) out.push_back(std::move(m));
    }
  }
  return out;
}

MonomialVectors monomial_vectors(const std::vector<MonomialVectors>& per_variable, const ClusterMonomial& m) {
  const std::size_t n = per_variable.at(m.factors.at(0).first).g.size();
  MonomialVectors r{IntVector(n, 0), IntVector(n, 0), IntVector(n, 0), IntVector(n, 0)};
  for (const auto& [id, e] : m.factors) {
    const auto& v = per_variable.at(id);
    for (std::size_t i = 0; i < n; ++i) {
      r.d[i] = checked_add(r.d[i], checked_mul(e, v.d[i]));
      r.g[i] = checked_add(r.g[i], checked_mul(e, v.g[i]));
      r.f[i] = checked_add(r.f[i], checked_mul(e, v.f[i]));
      r.fbar[i] = checked_add(r.fbar[i], checked_mul(e, v.fbar[i]));
    }
  }
  return r;
}

std::string FiniteTypeLabel::name() const {
  if (!found) return "not found";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    const auto& [series, rank] = components[i];
    s += series + std::to_string(rank);
  }
  return s;
}

namespace {

bool positive_definite(const IntMatrix& cartan, const IntVector& s) {
  const std::size_t n = cartan.rows();
  IntMatrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = checked_mul(s[i], cartan(i, j));
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = sym(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

std::pair<std::string, std::size_t> component_type(const IntMatrix& c, const IntVector& s,
                                                   const std::vector<std::size_t>& comp) {
  const std::size_t n = comp.size();
  if (n == 1) return {"A", 1};
  std::vector<std::size_t> degree(n, 0);
  std::size_t double_a = kNone, double_b = kNone;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto prod = c(comp[a], comp[b]) * c(comp[b], comp[a]);
      if (prod == 0) continue;
      ++degree[a];
      ++degree[b];
      if (prod == 3) return {"G", 2};
      if (prod == 2) {
        double_a = a;
        double_b = b;
      }
    }
  if (double_a != kNone) {
    if (n == 2) return {s[comp[0]] > s[comp[1]] ? "C" : "B", 2};
    if (degree[double_a] != 1 && degree[double_b] != 1) return {"F", 4};
    std::int64_t top = 0;
    for (auto v : comp) top = std::max(top, s[v]);
    std::size_t long_count = 0;
    for (auto v : comp) long_count += s[v] == top ? 1 : 0;
    return {long_count == 1 ? "C" : "B", n};
  }
  const auto branch = std::find_if(degree.begin(), degree.end(), [](std::size_t d) { return d >= 3; });
  if (branch == degree.end()) return {"A", n};
  const std::size_t centre = static_cast<std::size_t>(branch - degree.begin());
  std::vector<std::size_t> arms;
  for (std::size_t start = 0; start < n; ++start) {
    if (c(comp[centre], comp[start]) == 0 || start == centre) continue;
    std::size_t len = 1, prev = centre, cur = start;
    while (true) {
      std::size_t next = kNone;
      for (std::size_t w = 0; w < n; ++w)
        if (w != prev && w != cur && c(comp[cur], comp[w]) != 0) next = w;
      if (next == kNone) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {"D", n};
  return {"E", n};
}

}  // namespace

FiniteTypeLabel dynkin_type(const IntMatrix& cartan, const IntVector& s) {
  FiniteTypeLabel label;
  if (!positive_definite(cartan, s)) return label;
  const std::size_t n = cartan.rows();
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t idx = 0; idx < comp.size(); ++idx)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && cartan(comp[idx], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    label.components.push_back(component_type(cartan, s, comp));
  }
  label.found = true;
  return label;
}

FiniteTypeLabel classify_finite_type(const ExchangeMatrix& b, std::size_t depth) {
  auto key = [](const ExchangeMatrix& m) {
    std::vector<std::int64_t> k;
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j) k.push_back(m(i, j));
    return k;
  };
  std::set<std::vector<std::int64_t>> seen{key(b)};
  std::vector<ExchangeMatrix> layer{b};
  for (std::size_t d = 0; d <= depth && !layer.empty(); ++d) {
    std::vector<ExchangeMatrix> next;
    for (const auto& m : layer) {
      auto label = dynkin_type(cartan_counterpart(m), m.symmetrizer());
      if (label.found) return label;
      if (d == depth) continue;
      for (std::size_t k = 0; k < m.n(); ++k) {
        ExchangeMatrix mk = mutate_matrix(m, k);
        if (seen.insert(key(mk)).second) next.push_back(std::move(mk));
      }
    }
    layer = std::move(next);
  }
  return {};
}

}  // namespace clusterlab
