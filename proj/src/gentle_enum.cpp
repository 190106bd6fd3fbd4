// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "clusterlab/gentle.hpp"

namespace clusterlab {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

// Minimum over vertex permutations of the sorted arrow list.
std::vector<Pair> canonical_multigraph(std::size_t n, const std::vector<Pair>& arrows) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Pair> best;
  bool first = true;
  do {
    std::vector<Pair> mapped;
    for (const auto& [s, t] : arrows) mapped.emplace_back(perm[s], perm[t]);
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = std::move(mapped);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(std::size_t n, const std::vector<Pair>& arrows) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [s, t] : arrows) parent[find(s)] = find(t);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Relation subsets at one vertex allowed by the gentle conditions: every
// incoming arrow has at most one outgoing partner inside and one outside the
// relations, and symmetrically for outgoing arrows.
std::vector<std::vector<Pair>> local_relation_choices(const std::vector<std::size_t>& in,
                                                      const std::vector<std::size_t>& out) {
  std::vector<Pair> cells;
  for (auto a : in)
    for (auto b : out) cells.emplace_back(a, b);
  std::vector<std::vector<Pair>> result;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    bool ok = true;
    for (auto a : in) {
      std::size_t inside = 0, outside = 0;
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].first == a) (((mask >> c) & 1u) ? inside : outside)++;
      ok = ok && inside <= 1 && outside <= 1;
    }
    for (auto b : out) {
      std::size_t inside = 0, outside = 0;
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].second == b) (((mask >> c) & 1u) ? inside : outside)++;
      ok = ok && inside <= 1 && outside <= 1;
    }
    if (!ok) continue;
    std::vector<Pair> chosen;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((mask >> c) & 1u) chosen.push_back(cells[c]);
    result.push_back(std::move(chosen));
  }
  return result;
}

}  // namespace

std::vector<int> canonical_code(const BoundQuiver& q) {
  const std::size_t n = q.num_vertices, m = q.arrows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    // Arrows sorted by mapped endpoints; parallel arrows may be ordered freely.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t a) { return Pair{perm[q.arrows[a].src], perm[q.arrows[a].tgt]}; };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) runs of parallel arrows
    for (std::size_t i = 0; i < m;) {
      std::size_t j = i;
      while (j < m && key(order[j]) == key(order[i])) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
      if (gi == groups.size()) {
        std::vector<std::size_t> pos(m);
        for (std::size_t i = 0; i < m; ++i) pos[order[i]] = i;
        std::vector<int> code{static_cast<int>(n), static_cast<int>(m)};
        for (std::size_t i = 0; i < m; ++i) {
          code.push_back(static_cast<int>(key(order[i]).first));
          code.push_back(static_cast<int>(key(order[i]).second));
        }
        std::vector<Pair> rel;
        for (const auto& [a, b] : q.relations) rel.emplace_back(pos[a], pos[b]);
        std::sort(rel.begin(), rel.end());
        code.push_back(static_cast<int>(rel.size()));
        for (const auto& [a, b] : rel) {
          code.push_back(static_cast<int>(a));
          code.push_back(static_cast<int>(b));
        }
        if (best.empty() || code < best) best = std::move(code);
        return;
      }
      auto [b, e] = groups[gi];
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
      do {
        rec(gi + 1);
      } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                     order.begin() + static_cast<std::ptrdiff_t>(e)));
    };
    rec(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<BoundQuiver> enumerate_gentle_quivers(std::size_t max_vertices, std::size_t max_arrows) {
  std::vector<BoundQuiver> out;
  std::set<std::vector<int>> seen;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<Pair> slots;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) slots.emplace_back(s, t);
    std::set<std::vector<Pair>> graphs;
    std::vector<Pair> current;
    std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (!current.empty() || n == 1)
        if (connected(n, current)) graphs.insert(canonical_multigraph(n, current));
      if (current.size() == max_arrows) return;
      for (std::size_t i = from; i < slots.size(); ++i) {
        const auto [s, t] = slots[i];
        if (outdeg[s] == 2 || indeg[t] == 2) continue;
        ++outdeg[s];
        ++indeg[t];
        current.push_back(slots[i]);
        grow(i);
        current.pop_back();
        --outdeg[s];
        --indeg[t];
      }
    };
    grow(0);

    for (const auto& g : graphs) {
      BoundQuiver base;
      base.num_vertices = n;
      for (std::size_t a = 0; a < g.size(); ++a) base.add_arrow("a" + std::to_string(a + 1), g[a].first, g[a].second);
      std::vector<std::vector<std::vector<Pair>>> choices;
      for (std::size_t v = 0; v < n; ++v) choices.push_back(local_relation_choices(base.in_arrows(v), base.out_arrows(v)));
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        BoundQuiver q = base;
        for (std::size_t v = 0; v < n; ++v)
          for (const auto& [a, b] : choices[v][pick[v]]) q.add_relation(a, b);
        if (is_finite_dimensional(q) && seen.insert(canonical_code(q)).second) out.push_back(std::move(q));
        std::size_t v = 0;
        while (v < n && ++pick[v] == choices[v].size()) pick[v++] = 0;
        if (v == n) break;
      }
    }
  }
  return out;
}

}  // namespace clusterlab
