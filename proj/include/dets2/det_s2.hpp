#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

#include "dets2/configuration.hpp"
#include "dets2/matrix.hpp"

namespace dets2 {

// One signed degree-6 monomial of the form: beta[s] == 1 picks the y
// coordinate of storage slot s, beta[s] == 0 picks x.
struct Monomial {
  int sign;
  std::array<std::uint8_t, 6> beta;
};

// The twelve monomials, six positive and six negative, over the slot order
// (1,2),(1,3),(1,4),(2,3),(2,4),(3,4). Every monomial takes three x and
// three y coordinates. This table is the single source of truth: the
// coefficient-space module re-reads it as the canonical 64-entry vector.
inline constexpr std::array<Monomial, 12> kDetS2Monomials{{
    {+1, {0, 1, 1, 0, 1, 0}},  // x12 y13 y14 x23 y24 x34
    {+1, {0, 1, 0, 1, 1, 0}},  // x12 y13 x14 y23 y24 x34
    {+1, {0, 0, 1, 1, 0, 1}},  // x12 x13 y14 y23 x24 y34
    {+1, {1, 0, 1, 1, 0, 0}},  // y12 x13 y14 y23 x24 x34
    {+1, {1, 1, 0, 0, 0, 1}},  // y12 y13 x14 x23 x24 y34
    {+1, {1, 0, 0, 0, 1, 1}},  // y12 x13 x14 x23 y24 y34
    {-1, {1, 0, 0, 1, 0, 1}},  // y12 x13 x14 y23 x24 y34
    {-1, {1, 0, 1, 0, 0, 1}},  // y12 x13 y14 x23 x24 y34
    {-1, {1, 1, 0, 0, 1, 0}},  // y12 y13 x14 x23 y24 x34
    {-1, {0, 1, 0, 0, 1, 1}},  // x12 y13 x14 x23 y24 y34
    {-1, {0, 0, 1, 1, 1, 0}},  // x12 x13 y14 y23 y24 x34
    {-1, {0, 1, 1, 1, 0, 0}},  // x12 y13 y14 y23 x24 x34
}};

// Direct evaluation of the twelve-term formula.
template <FieldScalar S>
S det_s2_direct(const Configuration<S>& c) {
  S total(0);
  for (const auto& t : kDetS2Monomials) {
    S term(t.sign);
    for (std::size_t s = 0; s < 6; ++s) term = term * (t.beta[s] ? c.slot(s).y : c.slot(s).x);
    total = total + term;
  }
  return total;
}

// Equivalent three-term expression built from 2x2 determinants and the
// bilinear pairing <(a,b),(c,d)> = ac + bd. Polynomial in the coordinates,
// hence exact over the rational backend as well.
template <FieldScalar S>
S det_s2_inner_product(const Configuration<S>& c) {
  const Vec2<S>& v12 = c.at(1, 2);
  const Vec2<S>& v13 = c.at(1, 3);
  const Vec2<S>& v14 = c.at(1, 4);
  const Vec2<S>& v23 = c.at(2, 3);
  const Vec2<S>& v24 = c.at(2, 4);
  const Vec2<S>& v34 = c.at(3, 4);
  return cross(v14, v24) * dot(v12, v34) * dot(v13, v23) +
         cross(v34, v14) * dot(v13, v24) * dot(v12, v23) +
         cross(v24, v34) * dot(v14, v23) * dot(v12, v13);
}

// Coordinate rows (alpha row, then beta row) of the triangle relation
//   l_ij v_ij + l_jk v_jk - l_ik v_ik = 0
// over the lambda column order (l12, l23, l34, l13, l24, l14).
template <FieldScalar S>
std::array<std::array<S, 6>, 2> triangle_relation_rows(const Configuration<S>& c, int i, int j, int k) {
  std::array<std::array<S, 6>, 2> rows{};
  const std::size_t cij = kSlotToLambdaCol[pair_slot(i, j)];
  const std::size_t cjk = kSlotToLambdaCol[pair_slot(j, k)];
  const std::size_t cik = kSlotToLambdaCol[pair_slot(i, k)];
  const Vec2<S>& vij = c.at(i, j);
  const Vec2<S>& vjk = c.at(j, k);
  const Vec2<S>& vik = c.at(i, k);
  rows[0][cij] = vij.x;
  rows[1][cij] = vij.y;
  rows[0][cjk] = vjk.x;
  rows[1][cjk] = vjk.y;
  rows[0][cik] = -vik.x;
  rows[1][cik] = -vik.y;
  return rows;
}

// 6x6 coefficient matrix of the relations (1,2,3), (1,2,4), (1,3,4), rows
// interleaved alpha/beta. Its determinant equals the twelve-term form.
template <FieldScalar S>
Matrix<S> det_s2_matrix(const Configuration<S>& c) {
  Matrix<S> m(6, 6);
  constexpr std::array<std::array<int, 3>, 3> rels{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}};
  std::size_t r = 0;
  for (const auto& t : rels) {
    const auto rows = triangle_relation_rows(c, t[0], t[1], t[2]);
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < 6; ++j) m(r, j) = row[j];
      ++r;
    }
  }
  return m;
}

inline Rational det_s2_via_matrix(const Configuration<Rational>& c) {
  return det_exact(det_s2_matrix(c));
}

namespace detail {

// Plain cofactor expansion; only used for the floating backend, where the
// exact elimination engine does not apply.
inline double laplace_det(const Matrix<double>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  double total = 0.0;
  double s = 1.0;
  for (std::size_t c = 0; c < n; ++c, s = -s) {
    if (m(0, c) == 0.0) continue;
    Matrix<double> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    total += s * m(0, c) * laplace_det(minor);
  }
  return total;
}

}  // namespace detail

inline double det_s2_via_matrix(const Configuration<double>& c) {
  return detail::laplace_det(det_s2_matrix(c));
}

// True iff some triple i < j < k has v_ij = v_ik = v_jk, the defining
// vanishing locus of the form.
template <FieldScalar S>
bool has_equal_triple(const Configuration<S>& c) {
  for (const auto& t : kTriples) {
    const Vec2<S>& a = c.at(t[0], t[1]);
    const Vec2<S>& b = c.at(t[0], t[2]);
    const Vec2<S>& d = c.at(t[1], t[2]);
    if (a == b && b == d) return true;
  }
  return false;
}

}  // namespace dets2
