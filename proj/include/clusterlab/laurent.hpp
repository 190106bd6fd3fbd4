// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace clusterlab {

using Exponent = std::vector<int>;

/// Graded lexicographic order, largest first: total degree, then lexicographic.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multivariate Laurent polynomial with integer coefficients. Terms are kept in
/// graded-lex order with no zero coefficients, so equal polynomials have equal
/// term maps.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, mpz_class, GradedLexGreater>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static LaurentPoly constant(std::size_t n_vars, const mpz_class& c);
  static LaurentPoly monomial(Exponent exps, const mpz_class& c = 1);
  /// The coordinate variable x_{i+1} (0-based index i).
  static LaurentPoly variable(std::size_t n_vars, std::size_t i);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^exps, dropping the term if the coefficient cancels.
  void add_term(const Exponent& exps, const mpz_class& c);

  bool operator==(const LaurentPoly& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }
  bool operator<(const LaurentPoly& o) const;

 private:
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, unsigned e);

/// Exact quotient num / den. Throws InexactDivision when den does not divide
/// num in the Laurent polynomial ring, std::domain_error when den is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// d with p = N / x^d and N a polynomial not divisible by any variable.
std::vector<std::int64_t> denominator_vector(const LaurentPoly& p);

/// "coef * x1^e1 x2^e2 + ..." in graded-lex order; "0" for the zero polynomial.
std::string to_string(const LaurentPoly& p);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add(a, negate(b)); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

}  // namespace clusterlab
