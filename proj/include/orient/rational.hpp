#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orient {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Dense matrix of exact rationals, row-major. Zero dimensions are allowed
/// (a 0x0 matrix arises from empty multiplicity vectors).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  RationalMatrix(int rows, int cols, std::vector<Rational> data);
  /// Convenience for small literal matrices in tests and generators.
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RationalMatrix transpose() const;
  std::vector<Rational> multiply(std::span<const Rational> x) const;
  bool is_integral() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over the rationals by exact Gaussian elimination.
int rational_rank(RationalMatrix a);

/// A nonzero vector x with A x = 0, or empty when A has full column rank.
std::vector<Rational> nullspace_vector(RationalMatrix a);

/// Unique solution of A x = rhs for square nonsingular A; empty otherwise.
std::vector<Rational> solve_nonsingular(RationalMatrix a, std::vector<Rational> rhs);

BigInt factorial(int k);

}  // namespace orient
