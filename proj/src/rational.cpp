#include "orient/rational.hpp"

#include <stdexcept>
#include <string>

namespace orient {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("matrix: data size does not match dimensions");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("matrix: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix: vector length mismatch");
  std::vector<Rational> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
    }
  return y;
}

bool RationalMatrix::is_integral() const {
  for (const auto& q : data_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

namespace {

// Reduces `a` to reduced row echelon form in place; returns pivot columns.
std::vector<int> reduce(RationalMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (sgn(a(r, col)) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rational_rank(RationalMatrix a) { return static_cast<int>(reduce(a).size()); }

std::vector<Rational> nullspace_vector(RationalMatrix a) {
  const auto pivots = reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return {};
  std::vector<Rational> x(a.cols());
  x[free_col] = 1;
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) x[pivots[r]] = -a(r, free_col);
  return x;
}

std::vector<Rational> solve_nonsingular(RationalMatrix a, std::vector<Rational> rhs) {
  if (!a.square() || static_cast<int>(rhs.size()) != a.rows())
    throw std::invalid_argument("solve: need a square system");
  const int n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = rhs[i];
  }
  const auto pivots = reduce(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return {};
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

BigInt factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

}  // namespace orient
