// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/vectors.hpp"

#include <algorithm>

namespace clusterlab {

TrackedSeed TrackedSeed::root(const ExchangeMatrix& b, bool with_laurent) {
  TrackedSeed t;
  t.seed = with_laurent ? Seed::initial(b) : Seed{b, {}};
  const std::size_t n = b.n();
  t.c = IntMatrix::identity(n);
  t.g = IntMatrix::identity(n);
  t.f = IntMatrix(n, n);
  t.initial_b = b.b();
  t.laurent = with_laurent;
  return t;
}

TrackedSeed mutate_tracked(const TrackedSeed& t, std::size_t k) {
  const std::size_t n = t.n();
  if (k >= n) throw std::out_of_range("mutation direction out of range");
  const ExchangeMatrix& bm = t.matrix();
  TrackedSeed r;
  r.seed = t.laurent ? mutate_seed(t.seed, k) : Seed{mutate_matrix(bm, k), {}};
  r.laurent = t.laurent;
  r.initial_b = t.initial_b;
  r.walk = t.walk;
  r.walk.push_back(k);

  r.c = t.c;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (j == k) {
        r.c(i, j) = -t.c(i, k);
      } else {
        const auto bkj = bm(k, j);
        r.c(i, j) = checked_add(t.c(i, j), checked_add(checked_mul(positive_part(bkj), t.c(i, k)),
                                                       checked_mul(bkj, positive_part(-t.c(i, k)))));
      }
    }
  }

  r.g = t.g;
  for (std::size_t row = 0; row < n; ++row) {
    std::int64_t v = -t.g(row, k);
    for (std::size_t i = 0; i < n; ++i) {
      v = checked_add(v, checked_mul(positive_part(bm(i, k)), t.g(row, i)));
      v = checked_add(v, -checked_mul(positive_part(t.c(i, k)), t.initial_b(row, i)));
    }
    r.g(row, k) = v;
  }

  r.f = t.f;
  for (std::size_t row = 0; row < n; ++row) {
    std::int64_t pos = positive_part(t.c(row, k));
    std::int64_t neg = positive_part(-t.c(row, k));
    for (std::size_t i = 0; i < n; ++i) {
      pos = checked_add(pos, checked_mul(positive_part(bm(i, k)), t.f(row, i)));
      neg = checked_add(neg, checked_mul(positive_part(-bm(i, k)), t.f(row, i)));
    }
    r.f(row, k) = checked_add(-t.f(row, k), std::max(pos, neg));
  }
  return r;
}

TrackedSeed mutate_tracked(const TrackedSeed& t, std::span<const std::size_t> walk) {
  TrackedSeed r = t;
  for (auto k : walk) r = mutate_tracked(r, k);
  return r;
}

IntMatrix d_matrix(const TrackedSeed& t) {
  if (!t.laurent) throw std::logic_error("d-matrix needs Laurent expansions");
  const std::size_t n = t.n();
  IntMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) d.set_column(j, denominator_vector(t.seed.cluster[j]));
  return d;
}

std::optional<std::size_t> initial_variable_of(const TrackedSeed& t, std::size_t j) {
  const std::size_t n = t.n();
  for (std::size_t i = 0; i < n; ++i)
    if (t.f(i, j) != 0) return std::nullopt;
  std::optional<std::size_t> which;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = t.g(i, j);
    if (v == 1 && !which) {
      which = i;
    } else if (v != 0) {
      throw std::logic_error("zero f-vector whose g-vector is not a unit vector");
    }
  }
  if (!which) throw std::logic_error("zero f-vector with zero g-vector");
  for (std::size_t c = 0; c < n; ++c)
    if (t.f(*which, c) != 0) throw std::logic_error("initial variable detected but its F-row is nonzero");
  return which;
}

IntMatrix fbar_matrix(const TrackedSeed& t) {
  IntMatrix fb = t.f;
  for (std::size_t j = 0; j < t.n(); ++j) {
    if (auto i = initial_variable_of(t, j)) {
      for (std::size_t r = 0; r < t.n(); ++r) fb(r, j) = r == *i ? -1 : 0;
    }
  }
  return fb;
}

MonomialVectors vectors_of_monomial(const TrackedSeed& t, std::span<const std::int64_t> exponents) {
  const std::size_t n = t.n();
  if (exponents.size() != n) throw std::invalid_argument("exponent vector has the wrong length");
  for (auto e : exponents)
    if (e < 0) throw std::invalid_argument("cluster monomial exponents must be nonnegative");
  MonomialVectors v;
  v.g = t.g * exponents;
  v.f = t.f * exponents;
  v.fbar = fbar_matrix(t) * exponents;
  if (t.laurent) v.d = d_matrix(t) * exponents;
  return v;
}

bool check_tropical_duality(const TrackedSeed& t) {
  const IntMatrix s = IntMatrix::diagonal(t.matrix().symmetrizer());
  return t.g.transpose() * s * t.c == s;
}

bool check_langlands_dualities(std::span<const std::size_t> walk, const ExchangeMatrix& b) {
  const ExchangeMatrix dual = langlands_dual(b);
  const TrackedSeed t = mutate_tracked(TrackedSeed::root(b, false), walk);
  const TrackedSeed u = mutate_tracked(TrackedSeed::root(dual, false), walk);
  const IntVector& s = b.symmetrizer();
  const std::size_t n = b.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (checked_mul(s[i], t.f(i, j)) != checked_mul(u.f(i, j), s[j])) return false;
      if (checked_mul(s[i], t.c(i, j)) != checked_mul(u.c(i, j), s[j])) return false;
    }
  return true;
}

}  // namespace clusterlab
