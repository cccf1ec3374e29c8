#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "dets2/det_s2.hpp"
#include "dets2/matrix.hpp"

namespace dets2 {

template <FieldScalar S>
struct PointQuad {
  std::array<Vec2<S>, 4> pts{};

  friend bool operator==(const PointQuad&, const PointQuad&) = default;
};

// 8x6 coefficient matrix of the four triangle relations
//   l_ij v_ij + l_jk v_jk - l_ik v_ik = 0,   {i,j,k} in ascending order,
// two coordinate rows per relation, lambda column order
// (l12, l23, l34, l13, l24, l14). Its first six rows are det_s2_matrix.
inline Matrix<Rational> build_system_matrix(const Configuration<Rational>& c) {
  Matrix<Rational> m(8, 6);
  std::size_t r = 0;
  for (const auto& t : kTriples) {
    const auto rows = triangle_relation_rows(c, t[0], t[1], t[2]);
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < 6; ++j) m(r, j) = row[j];
      ++r;
    }
  }
  return m;
}

// Anchors Q1 at the origin and integrates the lambda-scaled directions.
// lambda is in lambda column order and must be a nonzero solution of the
// relation system; otherwise invalid_witness is thrown. The three edges not
// fixed by construction are verified exactly.
inline PointQuad<Rational> reconstruct_quadrilateral(const Configuration<Rational>& c,
                                                     const std::array<Rational, 6>& lambda) {
  const Rational& l12 = lambda[0];
  const Rational& l23 = lambda[1];
  const Rational& l34 = lambda[2];
  const Rational& l13 = lambda[3];
  const Rational& l24 = lambda[4];
  const Rational& l14 = lambda[5];

  bool all_zero = true;
  for (const auto& l : lambda) all_zero = all_zero && l.is_zero();
  if (all_zero) throw invalid_witness("reconstruct_quadrilateral: lambda must not be all zero");

  PointQuad<Rational> q;
  q.pts[0] = {Rational(0), Rational(0)};
  q.pts[1] = l12 * c.at(1, 2);
  q.pts[2] = l13 * c.at(1, 3);
  q.pts[3] = l14 * c.at(1, 4);

  const bool closes = q.pts[2] - q.pts[1] == l23 * c.at(2, 3) &&
                      q.pts[3] - q.pts[1] == l24 * c.at(2, 4) &&
                      q.pts[3] - q.pts[2] == l34 * c.at(3, 4);
  if (!closes) throw invalid_witness("reconstruct_quadrilateral: lambda does not solve the relation system");
  return q;
}

struct RealizabilityResult {
  std::size_t rank = 0;
  std::vector<std::array<Rational, 6>> lambda_basis;  // lambda column order
  std::vector<PointQuad<Rational>> quadrilaterals;    // one witness per basis vector
  bool realizable = false;                            // rank <= 5
};

// Rank dichotomy for the relation system: the configuration consists of the
// directions of all sides and diagonals of a (possibly degenerate)
// quadrilateral iff the 8x6 system is rank deficient.
inline RealizabilityResult classify(const Configuration<Rational>& c) {
  const auto rn = rank_and_nullspace(build_system_matrix(c));
  RealizabilityResult out;
  out.rank = rn.rank;
  out.realizable = rn.rank <= 5;
  for (const auto& k : rn.kernel) {
    std::array<Rational, 6> lambda;
    for (std::size_t i = 0; i < 6; ++i) lambda[i] = k[i];
    out.quadrilaterals.push_back(reconstruct_quadrilateral(c, lambda));
    out.lambda_basis.push_back(std::move(lambda));
  }
  return out;
}

// Edge directions of four points: entry {i,j} is P_j - P_i.
template <FieldScalar S>
Configuration<S> config_from_points(const PointQuad<S>& p) {
  Configuration<S> c;
  for (const auto& [i, j] : kPairOrder) c.set(i, j, p.pts[j - 1] - p.pts[i - 1]);
  return c;
}

struct AngleConfiguration {
  Configuration<double> config;
  double predicted;  // sin(phi1) sin(2 phi2) sin(phi3)
};

// Directions spanned by four lines through the origin: entry {i,j} is the
// unit vector at angle theta_j - theta_i. The form's value depends only on
// the consecutive gaps phi_i = theta_{i+1} - theta_i and equals
// sin(phi1) sin(2 phi2) sin(phi3).
inline AngleConfiguration config_from_angles(const std::array<double, 4>& theta) {
  Configuration<double> c;
  for (const auto& [i, j] : kPairOrder) {
    const double d = theta[j - 1] - theta[i - 1];
    c.set(i, j, Vec2<double>{std::cos(d), std::sin(d)});
  }
  const double phi1 = theta[1] - theta[0];
  const double phi2 = theta[2] - theta[1];
  const double phi3 = theta[3] - theta[2];
  return {std::move(c), std::sin(phi1) * std::sin(2.0 * phi2) * std::sin(phi3)};
}

}  // namespace dets2
