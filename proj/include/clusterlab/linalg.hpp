// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace clusterlab {

using IntVector = std::vector<std::int64_t>;

// Overflow-checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

inline std::int64_t positive_part(std::int64_t v) { return v > 0 ? v : 0; }

/// Dense row-major integer matrix with overflow-checked products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const std::int64_t> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const std::int64_t> values);

  IntMatrix transpose() const;
  IntMatrix operator-() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const std::int64_t> v);

/// Exact determinant (fraction-free Bareiss elimination over GMP integers).
mpz_class determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(std::span<const std::int64_t> v);

/// Dense matrix over the rationals, used for quiver representations.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space {x : m x = 0}, returned as the columns of a
/// cols() x k matrix.
RatMatrix nullspace(const RatMatrix& m);

/// Solves a x = b for a matrix a of full column rank. Returns false when b is
/// not in the column space.
bool solve_full_column_rank(const RatMatrix& a, const RatMatrix& b, RatMatrix& x);

/// Horizontal concatenation [a | b]; both must have the same row count.
RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);

}  // namespace clusterlab
