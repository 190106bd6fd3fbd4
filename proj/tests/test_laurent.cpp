// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "clusterlab/laurent.hpp"

using namespace clusterlab;

namespace {

mpq_class evaluate(const LaurentPoly& p, const std::vector<mpq_class>& x) {
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int k = e[i];
      for (int r = 0; r < (k < 0 ? -k : k); ++r) term = k < 0 ? mpq_class(term / x[i]) : mpq_class(term * x[i]);
    }
    total += term;
  }
  return total;
}

LaurentPoly random_poly(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> ed(-2, 2), cd(-3, 3), td(1, 4);
  LaurentPoly p(n);
  const int terms = td(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    for (auto& x : e) x = ed(rng);
    p.add_term(e, cd(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("textual form") {
  const LaurentPoly x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
  const LaurentPoly one = LaurentPoly::constant(2, 1);
  CHECK(to_string(LaurentPoly(2)) == "0");
  CHECK(to_string(one) == "1");
  CHECK(to_string(x1 * x2 + one) == "1 * x1^1 x2^1 + 1");
  CHECK(to_string(x1 - x1) == "0");
  CHECK(to_string(LaurentPoly::monomial({-1, 2}, -3)) == "-3 * x1^-1 x2^2");
}

TEST_CASE("graded lex order puts higher total degree first") {
  GradedLexGreater gt;
  CHECK(gt({1, 1}, {2, -1}));
  CHECK(gt({2, 0}, {1, 1}));
  CHECK_FALSE(gt({1, 1}, {1, 1}));
}

TEST_CASE("exact division of the A2 exchange binomial") {
  const LaurentPoly x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
  const LaurentPoly one = LaurentPoly::constant(2, 1);
  const LaurentPoly q = divide_exact(x2 + one, x1);
  CHECK(to_string(q) == "1 * x1^-1 x2^1 + 1 * x1^-1");
  CHECK(denominator_vector(q) == std::vector<std::int64_t>{1, 0});
  // (x1 + x2 + 1) / (x1 x2) is the third A2 variable; its numerator is coprime
  // to the monomial so the division below must be exact.
  const LaurentPoly third = divide_exact(x1 + x2 + one, x1 * x2);
  CHECK(denominator_vector(third) == std::vector<std::int64_t>{1, 1});
  CHECK(divide_exact(pow(x1 + one, 3), x1 + one) == pow(x1 + one, 2));
}

TEST_CASE("inexact division throws") {
  const LaurentPoly x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
  const LaurentPoly one = LaurentPoly::constant(2, 1);
  CHECK_THROWS_AS(divide_exact(x2 + one, x1 + one), InexactDivision);
  CHECK_THROWS_AS(divide_exact(x1, LaurentPoly(2)), std::exception);
}

TEST_CASE("denominator vectors of monomials and initial variables") {
  CHECK(denominator_vector(LaurentPoly::variable(3, 1)) == std::vector<std::int64_t>{0, -1, 0});
  CHECK(denominator_vector(LaurentPoly::monomial({-2, 1, 0})) == std::vector<std::int64_t>{2, -1, 0});
}

TEST_CASE("ring operations agree with evaluation at rational points") {
  std::mt19937 rng(3);
  const std::vector<mpq_class> pt{mpq_class(2, 3), mpq_class(-5, 7), mpq_class(3, 2)};
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a - b, pt) == evaluate(a, pt) - evaluate(b, pt));
    if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
  }
}
