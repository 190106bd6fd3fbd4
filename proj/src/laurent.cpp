// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clusterlab {

namespace {

long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

void require_same_arity(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("Laurent polynomials in different numbers of variables");
}

Exponent min_exponents(const LaurentPoly& p) {
  Exponent m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentPoly shift(const LaurentPoly& p, const Exponent& by) {
  LaurentPoly r(p.n_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s(e);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
    r.add_term(s, c);
  }
  return r;
}

}  // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const long da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

LaurentPoly LaurentPoly::constant(std::size_t n_vars, const mpz_class& c) {
  LaurentPoly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent exps, const mpz_class& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n_vars, std::size_t i) {
  if (i >= n_vars) throw std::out_of_range("variable index out of range");
  Exponent e(n_vars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

void LaurentPoly::add_term(const Exponent& exps, const mpz_class& c) {
  if (exps.size() != n_vars_) throw std::invalid_argument("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (n_vars_ != o.n_vars_) return n_vars_ < o.n_vars_;
  return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return GradedLexGreater{}(x.first, y.first);
                                        return x.second < y.second;
                                      });
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  LaurentPoly r(a);
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly negate(const LaurentPoly& a) {
  LaurentPoly r(a.n_vars());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  LaurentPoly r(a.n_vars());
  Exponent e(a.n_vars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly r = LaurentPoly::constant(a.n_vars(), 1);
  LaurentPoly base = a;
  while (e) {
    if (e & 1u) r = mul(r, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_arity(num, den);
  if (den.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (num.is_zero()) return LaurentPoly(num.n_vars());
  const std::size_t n = num.n_vars();

  // After the shifts no variable divides either side, so a Laurent quotient
  // exists iff the polynomial quotient does.
  const Exponent num_min = min_exponents(num), den_min = min_exponents(den);
  Exponent neg_num(n), neg_den(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_num[i] = -num_min[i];
    neg_den[i] = -den_min[i];
  }
  LaurentPoly rem = shift(num, neg_num);
  const LaurentPoly d = shift(den, neg_den);
  const auto& [lead_exp, lead_coef] = *d.terms().begin();

  LaurentPoly quotient(n);
  Exponent q_exp(n);
  while (!rem.is_zero()) {
    const auto& [r_exp, r_coef] = *rem.terms().begin();
    for (std::size_t i = 0; i < n; ++i) {
      q_exp[i] = r_exp[i] - lead_exp[i];
      if (q_exp[i] < 0) throw InexactDivision("leading monomial not divisible");
    }
    if (!mpz_divisible_p(r_coef.get_mpz_t(), lead_coef.get_mpz_t()))
      throw InexactDivision("leading coefficient not divisible");
    const mpz_class q_coef = r_coef / lead_coef;
    quotient.add_term(q_exp, q_coef);
    Exponent e(n);
    for (const auto& [de, dc] : d.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = de[i] + q_exp[i];
      rem.add_term(e, -q_coef * dc);
    }
  }
  Exponent back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = num_min[i] - den_min[i];
  return shift(quotient, back);
}

std::vector<std::int64_t> denominator_vector(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("denominator vector of the zero polynomial");
  const Exponent m = min_exponents(p);
  std::vector<std::int64_t> d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) d[i] = -static_cast<std::int64_t>(m[i]);
  return d;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    os << c.get_str();
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (first_var ? " * " : " ") << 'x' << (i + 1) << '^' << e[i];
      first_var = false;
    }
  }
  return os.str();
}

}  // namespace clusterlab
