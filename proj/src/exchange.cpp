// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/exchange.hpp"

#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

namespace clusterlab {

namespace {

bool symmetrizes(const IntMatrix& b, const IntVector& s) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (checked_mul(s[i], b(i, j)) != -checked_mul(s[j], b(j, i))) return false;
  return true;
}

}  // namespace

std::optional<IntVector> find_skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) return std::nullopt;
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto x = b(i, j), y = b(j, i);
      if ((x == 0) != (y == 0)) return std::nullopt;
      if (x != 0 && (x > 0) == (y > 0)) return std::nullopt;
    }
  }
  std::vector<mpq_class> ratio(n);
  std::vector<bool> seen(n, false);
  IntVector s(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> todo;
    seen[root] = true;
    ratio[root] = 1;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[j] || b(i, j) == 0) continue;
        // s_i b_ij = -s_j b_ji
        ratio[j] = ratio[i] * mpq_class(static_cast<long>(b(i, j)), 1) / mpq_class(-static_cast<long>(b(j, i)), 1);
        seen[j] = true;
        todo.push(j);
      }
    }
    mpz_class lcm_den = 1;
    for (auto i : component) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), ratio[i].get_den().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> scaled;
    for (auto i : component) {
      mpz_class v = ratio[i].get_num() * (lcm_den / ratio[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      scaled.push_back(v);
    }
    for (std::size_t c = 0; c < component.size(); ++c) {
      const mpz_class v = scaled[c] / g;
      if (!v.fits_slong_p()) return std::nullopt;
      s[component[c]] = v.get_si();
    }
  }
  if (!symmetrizes(b, s)) return std::nullopt;
  return s;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  auto s = find_skew_symmetrizer(b_);
  if (!s) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");
  s_ = std::move(*s);
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b, IntVector symmetrizer) : b_(std::move(b)), s_(std::move(symmetrizer)) {
  if (!b_.is_square() || s_.size() != b_.rows()) throw NotSkewSymmetrizable("symmetrizer has the wrong size");
  for (auto v : s_)
    if (v <= 0) throw NotSkewSymmetrizable("symmetrizer entries must be positive");
  for (std::size_t i = 0; i < b_.rows(); ++i)
    if (b_(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry");
  if (!symmetrizes(b_, s_)) throw NotSkewSymmetrizable("diagonal does not symmetrize the matrix");
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  const std::size_t n = m.n();
  if (k >= n) throw std::out_of_range("mutation direction out of range");
  const IntMatrix& b = m.b();
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r(i, j) = -b(i, j);
      } else {
        r(i, j) = checked_add(b(i, j), checked_add(checked_mul(positive_part(b(i, k)), b(k, j)),
                                                   checked_mul(b(i, k), positive_part(-b(k, j)))));
      }
    }
  return ExchangeMatrix(std::move(r), m.symmetrizer());
}

IntMatrix cartan_counterpart(const ExchangeMatrix& m) {
  const std::size_t n = m.n();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = i == j ? 2 : -std::llabs(m(i, j));
  return c;
}

ExchangeMatrix langlands_dual(const ExchangeMatrix& m) { return ExchangeMatrix(-m.b().transpose()); }

Seed Seed::initial(const ExchangeMatrix& b) {
  Seed s{b, {}};
  for (std::size_t i = 0; i < b.n(); ++i) s.cluster.push_back(LaurentPoly::variable(b.n(), i));
  return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.matrix.n();
  if (k >= n) throw std::out_of_range("mutation direction out of range");
  LaurentPoly plus = LaurentPoly::constant(n, 1), minus = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = s.matrix(i, k);
    if (b > 0) plus = mul(plus, pow(s.cluster[i], static_cast<unsigned>(b)));
    if (b < 0) minus = mul(minus, pow(s.cluster[i], static_cast<unsigned>(-b)));
  }
  Seed r{mutate_matrix(s.matrix, k), s.cluster};
  r.cluster[k] = divide_exact(add(plus, minus), s.cluster[k]);
  return r;
}

std::vector<std::size_t> parse_mutation_sequence(const std::string& text, std::size_t n) {
  std::vector<std::size_t> seq;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad mutation index '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad mutation index '" + item + "'");
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::out_of_range("mutation index " + item + " outside 1.." + std::to_string(n));
    seq.push_back(static_cast<std::size_t>(v - 1));
  }
  return seq;
}

ExchangeMatrix series_matrix(char series, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rank must be positive");
  IntMatrix b(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b(i, i + 1) = 1;
    b(i + 1, i) = -1;
  }
  switch (series) {
    case 'A':
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("type C needs rank at least 2");
      b(1, 0) = -2;
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("type B needs rank at least 2");
      b(0, 1) = 2;
      break;
    default:
      throw std::invalid_argument(std::string("unknown series ") + series);
  }
  return ExchangeMatrix(std::move(b));
}

}  // namespace clusterlab
