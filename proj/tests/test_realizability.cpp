#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dets2/realizability.hpp"
#include "support.hpp"

using dets2::Configuration;
using dets2::Matrix;
using dets2::PointQuad;
using dets2::Rational;
using dets2::Vec2;
using testsupport::rand_config;
using testsupport::rand_points;
using testsupport::rand_realizable;
using testsupport::v_config;
using testsupport::w_config;

namespace {

PointQuad<Rational> unit_square() {
  PointQuad<Rational> q;
  q.pts = {Vec2<Rational>{Rational(0), Rational(0)}, Vec2<Rational>{Rational(1), Rational(0)},
           Vec2<Rational>{Rational(0), Rational(1)}, Vec2<Rational>{Rational(1), Rational(1)}};
  return q;
}

bool edge_identities_hold(const Configuration<Rational>& c, const std::array<Rational, 6>& lambda,
                          const PointQuad<Rational>& q) {
  for (std::size_t col = 0; col < 6; ++col) {
    const auto& [i, j] = dets2::kLambdaPairs[col];
    if (!(q.pts[j - 1] - q.pts[i - 1] == lambda[col] * c.at(i, j))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the first six system rows form the determinant matrix") {
  testsupport::Rng rng(301);
  for (int iter = 0; iter < 20; ++iter) {
    const auto c = rand_config(rng);
    const auto sys = dets2::build_system_matrix(c);
    const auto six = dets2::det_s2_matrix(c);
    REQUIRE(sys.rows() == 8);
    REQUIRE(sys.cols() == 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t col = 0; col < 6; ++col) CHECK(sys(r, col) == six(r, col));
  }
}

TEST_CASE("row eight carries the y coordinate of v34") {
  testsupport::Rng rng(302);
  const auto c = rand_config(rng);
  const auto sys = dets2::build_system_matrix(c);
  // lambda columns: (l12, l23, l34, l13, l24, l14)
  CHECK(sys(6, 1) == c.at(2, 3).x);
  CHECK(sys(6, 2) == c.at(3, 4).x);
  CHECK(sys(6, 4) == -c.at(2, 4).x);
  CHECK(sys(7, 1) == c.at(2, 3).y);
  CHECK(sys(7, 2) == c.at(3, 4).y);
  CHECK(sys(7, 4) == -c.at(2, 4).y);
  CHECK(sys(7, 0) == Rational(0));
  CHECK(sys(7, 3) == Rational(0));
  CHECK(sys(7, 5) == Rational(0));
}

TEST_CASE("the zero configuration yields the zero system") {
  const auto sys = dets2::build_system_matrix(testsupport::zero_config());
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t col = 0; col < 6; ++col) CHECK(sys(r, col) == Rational(0));

  // rank 0, six kernel vectors, six all-origin witnesses
  const auto res = dets2::classify(testsupport::zero_config());
  CHECK(res.rank == 0);
  CHECK(res.realizable);
  CHECK(res.lambda_basis.size() == 6);
  REQUIRE(res.quadrilaterals.size() == 6);
  for (const auto& q : res.quadrilaterals)
    for (const auto& p : q.pts) CHECK(p == Vec2<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("alternating row dependences") {
  testsupport::Rng rng(303);
  for (int iter = 0; iter < 200; ++iter) {
    const auto sys = dets2::build_system_matrix(rand_config(rng));
    for (std::size_t parity = 0; parity < 2; ++parity)
      for (std::size_t col = 0; col < 6; ++col)
        CHECK(sys(parity, col) - sys(parity + 2, col) + sys(parity + 4, col) - sys(parity + 6, col) ==
              Rational(0));
  }
}

TEST_CASE("rank of the system equals the rank of its first six rows") {
  testsupport::Rng rng(304);
  for (int iter = 0; iter < 100; ++iter) {
    const auto c = iter % 2 == 0 ? rand_config(rng) : rand_realizable(rng);
    const auto sys = dets2::build_system_matrix(c);
    Matrix<Rational> top(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t col = 0; col < 6; ++col) top(r, col) = sys(r, col);
    CHECK(dets2::rank_and_nullspace(sys).rank == dets2::rank_and_nullspace(top).rank);
    CHECK(dets2::det_exact(top) == dets2::det_s2_direct(c));
  }
}

TEST_CASE("full-rank fixture has no kernel and some nonzero 6x6 minor") {
  testsupport::Rng rng(305);
  const auto c = rand_config(rng);
  REQUIRE(dets2::det_s2_direct(c) != Rational(0));  // generic sample

  const auto sys = dets2::build_system_matrix(c);
  const auto rn = dets2::rank_and_nullspace(sys);
  CHECK(rn.rank == 6);
  CHECK(rn.kernel.empty());

  // brute force: scan all 28 row choices for a nonzero 6x6 minor
  bool nonzero_minor = false;
  for (std::size_t a = 0; a < 8 && !nonzero_minor; ++a)
    for (std::size_t b = a + 1; b < 8 && !nonzero_minor; ++b) {
      Matrix<Rational> sub(6, 6);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < 8; ++r) {
        if (r == a || r == b) continue;
        for (std::size_t col = 0; col < 6; ++col) sub(rr, col) = sys(r, col);
        ++rr;
      }
      nonzero_minor = !testsupport::det_cofactor(sub).is_zero();
    }
  CHECK(nonzero_minor);
}

TEST_CASE("classify on the named fixtures") {
  const auto w = dets2::classify(w_config());
  CHECK(w.rank == 6);
  CHECK_FALSE(w.realizable);
  CHECK(w.lambda_basis.empty());
  CHECK(w.quadrilaterals.empty());

  const auto v = dets2::classify(v_config());
  CHECK(v.rank == 5);
  CHECK(v.realizable);
  REQUIRE(v.lambda_basis.size() == 1);
  const std::array<Rational, 6> expected{Rational(0), Rational(0), Rational(1),
                                         Rational(0), Rational(1), Rational(1)};
  CHECK(v.lambda_basis[0] == expected);
  REQUIRE(v.quadrilaterals.size() == 1);
  const auto& q = v.quadrilaterals[0];
  CHECK(q.pts[0] == Vec2<Rational>{Rational(0), Rational(0)});
  CHECK(q.pts[1] == Vec2<Rational>{Rational(0), Rational(0)});
  CHECK(q.pts[2] == Vec2<Rational>{Rational(0), Rational(0)});
  CHECK(q.pts[3] == Vec2<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("classify on the unit square") {
  const auto c = dets2::config_from_points(unit_square());
  const auto res = dets2::classify(c);
  CHECK(res.rank == 5);
  CHECK(res.realizable);
  REQUIRE(res.lambda_basis.size() == 1);
  for (const auto& l : res.lambda_basis[0]) CHECK(l == Rational(1));
  REQUIRE(res.quadrilaterals.size() == 1);
  CHECK(res.quadrilaterals[0].pts == unit_square().pts);
}

TEST_CASE("point-derived configurations vanish") {
  testsupport::Rng rng(306);
  for (int iter = 0; iter < 100; ++iter) {
    const auto c = dets2::config_from_points(rand_points(rng));
    CHECK(dets2::det_s2_direct(c) == Rational(0));
  }

  PointQuad<Rational> same;
  const auto p = testsupport::rand_vec(rng);
  same.pts = {p, p, p, p};
  CHECK(dets2::config_from_points(same) == testsupport::zero_config());
}

TEST_CASE("reconstruction from an all-ones lambda recovers translated points") {
  testsupport::Rng rng(307);
  for (int iter = 0; iter < 50; ++iter) {
    const auto pts = rand_points(rng);
    const auto c = dets2::config_from_points(pts);
    std::array<Rational, 6> ones;
    ones.fill(Rational(1));
    const auto q = dets2::reconstruct_quadrilateral(c, ones);
    for (std::size_t i = 0; i < 4; ++i) CHECK(q.pts[i] == pts.pts[i] - pts.pts[0]);
    CHECK(edge_identities_hold(c, ones, q));
  }
}

TEST_CASE("reconstruction rejects bad witnesses") {
  std::array<Rational, 6> zero{};
  CHECK_THROWS_AS(dets2::reconstruct_quadrilateral(v_config(), zero), dets2::invalid_witness);

  std::array<Rational, 6> not_solution{};
  not_solution[0] = Rational(1);
  CHECK_THROWS_AS(dets2::reconstruct_quadrilateral(w_config(), not_solution), dets2::invalid_witness);
}

TEST_CASE("dichotomy between vanishing and rank deficiency") {
  testsupport::Rng rng(308);
  for (int iter = 0; iter < 150; ++iter) {
    const auto c = rand_config(rng);
    const bool vanishes = dets2::det_s2_direct(c).is_zero();
    const auto res = dets2::classify(c);
    CHECK(vanishes == (res.rank <= 5));
    CHECK(res.realizable == (res.rank <= 5));
    CHECK(res.realizable == !res.lambda_basis.empty());
  }
  for (int iter = 0; iter < 150; ++iter) {
    const auto c = rand_realizable(rng);
    CHECK(dets2::det_s2_direct(c) == Rational(0));
    const auto res = dets2::classify(c);
    CHECK(res.rank <= 5);
    REQUIRE(!res.lambda_basis.empty());
    for (std::size_t k = 0; k < res.lambda_basis.size(); ++k)
      CHECK(edge_identities_hold(c, res.lambda_basis[k], res.quadrilaterals[k]));
  }
}

TEST_CASE("angle configurations obey the sine-product law") {
  const double pi = std::numbers::pi;

  const auto fixed = dets2::config_from_angles({0.0, pi / 6, pi / 2, 2 * pi / 3});
  const double expected = std::sin(pi / 6) * std::sin(2 * pi / 3) * std::sin(pi / 6);
  CHECK(fixed.predicted == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(dets2::det_s2_direct(fixed.config) - fixed.predicted) <= 1e-9);

  const auto collapsed = dets2::config_from_angles({1.0, 1.0, 2.0, 3.0});
  CHECK(collapsed.predicted == 0.0);
  CHECK(std::abs(dets2::det_s2_direct(collapsed.config)) <= 1e-9);

  const auto straight = dets2::config_from_angles({0.5, 1.0, 1.0 + pi / 2, 2.5});
  CHECK(std::abs(straight.predicted) <= 1e-12);  // sin(pi) factor
  CHECK(std::abs(dets2::det_s2_direct(straight.config)) <= 1e-9);

  testsupport::Rng rng(309);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int iter = 0; iter < 100; ++iter) {
    const auto ac = dets2::config_from_angles({angle(rng), angle(rng), angle(rng), angle(rng)});
    CHECK(std::abs(dets2::det_s2_direct(ac.config) - ac.predicted) <= 1e-9);
  }
}
