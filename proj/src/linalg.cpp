// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include "clusterlab/linalg.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace clusterlab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, std::span<const std::int64_t> values) {
  if (values.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(*this);
  for (auto& v : r.data_) v = checked_mul(v, -1);
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
    }
  return r;
}

IntVector operator*(const IntMatrix& a, std::span<const std::int64_t> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] = checked_add(r[i], checked_mul(a(i, k), v[k]));
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

// Fraction-free row reduction on int64 rows with gcd normalisation. Returns
// std::nullopt if an intermediate value overflows.
std::optional<std::size_t> small_integer_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const std::int64_t pv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = at(i, c);
      if (f == 0) continue;
      std::int64_t g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(at(i, j), pv, &x) || __builtin_mul_overflow(at(r, j), f, &y) ||
            __builtin_sub_overflow(x, y, &z))
          return std::nullopt;
        at(i, j) = z;
        g = std::gcd(g, z);
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) at(i, j) /= g;
    }
    ++r;
  }
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * cols + j]; };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const mpq_class inv = 1 / at(r, c);
    for (std::size_t j = c; j < cols; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  std::vector<std::int64_t> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  if (auto r = small_integer_rank(a, m.rows(), m.cols())) return *r;
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = static_cast<long>(m(i, j));
  return rank(q);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << to_string(m.row(i));
  }
  os << ']';
  return os.str();
}

std::string to_string(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  bool integral = true;
  std::vector<std::int64_t> small;
  small.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows() && integral; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j);
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
        integral = false;
        break;
      }
      small.push_back(v.get_num().get_si());
    }
  if (integral)
    if (auto r = small_integer_rank(std::move(small), m.rows(), m.cols())) return *r;
  std::vector<mpq_class> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  return rref(a, m.rows(), m.cols()).size();
}

RatMatrix nullspace(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpq_class> a;
  a.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.push_back(m(i, j));
  const auto pivots = rref(a, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis(cols, cols - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a[r * cols + free];
    ++k;
  }
  return basis;
}

bool solve_full_column_rank(const RatMatrix& a, const RatMatrix& b, RatMatrix& x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t rows = a.rows(), n = a.cols(), k = b.cols();
  const std::size_t cols = n + k;
  std::vector<mpq_class> aug(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * cols + j] = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug[i * cols + n + j] = b(i, j);
  }
  const auto pivots = rref(aug, rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= n) return false;
  if (pivots.size() != n) throw std::invalid_argument("solve: matrix is not of full column rank");
  x = RatMatrix(n, k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = aug[r * cols + n + j];
  return true;
}

RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  RatMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

}  // namespace clusterlab
