#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "dets2/rational.hpp"

namespace dets2 {

// Dense row-major matrix over a scalar field.
template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw shape_error("Matrix: ragged row list");
      std::size_t j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : "\n [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << m(r, c);
    os << "]";
  }
  return os;
}

template <FieldScalar S>
std::vector<S> multiply(const Matrix<S>& m, std::span<const S> x) {
  if (x.size() != m.cols()) throw shape_error("multiply: vector length must match column count");
  std::vector<S> y(m.rows(), S(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] = y[r] + m(r, c) * x[c];
  return y;
}

namespace detail {

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw internal_error("fraction-free elimination: inexact division");
  return q;
}

struct IntegerRows {
  std::vector<BigInt> a;          // row-major
  std::vector<BigInt> row_scale;  // positive multiplier applied to each input row
};

// Multiplies each row by the lcm of its denominators. Row scaling changes
// neither the rank nor the kernel; the determinant picks up the product of
// the scales.
inline IntegerRows clear_denominators(const Matrix<Rational>& m) {
  IntegerRows out;
  out.a.resize(m.rows() * m.cols());
  out.row_scale.assign(m.rows(), BigInt(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).den());
    out.row_scale[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.a[r * m.cols() + c] = m(r, c).num() * (l / m(r, c).den());
  }
  return out;
}

struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
};

// Fraction-free (Bareiss) elimination to row echelon form. Pivoting is
// deterministic: columns left to right, first row with a nonzero entry.
// Intermediate entries stay integral; the division by the previous pivot is
// checked and reported as internal_error if it ever left a remainder.
inline Echelon bareiss_echelon(std::vector<BigInt> data, std::size_t rows, std::size_t cols) {
  Echelon e;
  e.rows = rows;
  e.cols = cols;
  e.a = std::move(data);
  BigInt prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && e.a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(e.a[r * cols + j], e.a[p * cols + j]);
      e.swap_sign = -e.swap_sign;
    }
    const BigInt pivot = e.a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        e.a[i * cols + j] = exact_div(e.a[i * cols + j] * pivot - e.a[i * cols + c] * e.a[r * cols + j], prev);
      e.a[i * cols + c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace detail

// Exact determinant by fraction-free elimination.
inline Rational det_exact(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw shape_error("det_exact: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  auto ir = detail::clear_denominators(m);
  const auto e = detail::bareiss_echelon(std::move(ir.a), n, n);
  if (e.pivot_cols.size() < n) return Rational(0);
  BigInt det_scaled = e.a[(n - 1) * n + (n - 1)];
  if (e.swap_sign < 0) det_scaled = -det_scaled;
  BigInt scale(1);
  for (const auto& s : ir.row_scale) scale *= s;
  return Rational(det_scaled, scale);
}

// Scales a rational vector to a primitive integer vector: clear denominators,
// divide by the content, flip the sign so the first nonzero entry is positive.
inline std::vector<Rational> normalize_primitive(std::span<const Rational> v) {
  BigInt l(1);
  for (const auto& x : v) l = lcm(l, x.den());
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const auto& x : v) ints.push_back(x.num() * (l / x.den()));
  BigInt g(0);
  for (const auto& n : ints) g = gcd(g, n);
  if (g == 0) return std::vector<Rational>(v.size(), Rational(0));
  int flip = 1;
  for (const auto& n : ints)
    if (n != 0) {
      flip = sgn(n);
      break;
    }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& n : ints) out.emplace_back(flip < 0 ? BigInt(-(n / g)) : BigInt(n / g));
  return out;
}

struct RankNullspace {
  std::size_t rank = 0;
  // Kernel basis from the reduced echelon form, one vector per free column in
  // ascending column order, each normalized to a primitive integer vector.
  std::vector<std::vector<Rational>> kernel;
};

inline RankNullspace rank_and_nullspace(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto ir = detail::clear_denominators(m);
  const auto e = detail::bareiss_echelon(std::move(ir.a), rows, cols);

  RankNullspace out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : e.pivot_cols) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = Rational(1);
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
      const std::size_t pc = e.pivot_cols[i];
      Rational sum(0);
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j].is_zero()) continue;
        sum += Rational(e.a[i * cols + j]) * x[j];
      }
      x[pc] = -(sum / Rational(e.a[i * cols + pc]));
    }
    out.kernel.push_back(normalize_primitive(x));
  }
  return out;
}

}  // namespace dets2
