#pragma once

// Shared test helpers: deterministic random generators for scalars,
// configurations and points, the named fixtures, and the independent
// cofactor-expansion determinant used as the oracle for det_exact.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dets2/det_s2.hpp"
#include "dets2/matrix.hpp"
#include "dets2/realizability.hpp"

namespace testsupport {

using dets2::BigInt;
using dets2::Configuration;
using dets2::Matrix;
using dets2::PointQuad;
using dets2::Rational;
using dets2::Vec2;

using Rng = std::mt19937_64;

// Independent oracle: textbook cofactor expansion along the first row.
// Deliberately shares nothing with the elimination engine it checks.
inline Rational det_cofactor(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw dets2::shape_error("det_cofactor: matrix must be square");
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c, sign = -sign) {
    if (m(0, c).is_zero()) continue;
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    total += Rational(sign) * m(0, c) * det_cofactor(minor);
  }
  return total;
}

// Rational with numerator in [-9, 9] and denominator in [1, 9].
inline Rational rand_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational r = rand_rational(rng);
    if (!r.is_zero()) return r;
  }
}

inline Rational rand_integer(Rng& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Rational(d(rng));
}

inline Vec2<Rational> rand_vec(Rng& rng) { return {rand_rational(rng), rand_rational(rng)}; }

inline Configuration<Rational> rand_config(Rng& rng) {
  Configuration<Rational> c;
  for (std::size_t s = 0; s < 6; ++s) c.slot(s) = rand_vec(rng);
  return c;
}

inline Configuration<double> to_float(const Configuration<Rational>& c) {
  Configuration<double> f;
  for (std::size_t s = 0; s < 6; ++s)
    f.slot(s) = {c.slot(s).x.to_double(), c.slot(s).y.to_double()};
  return f;
}

inline PointQuad<Rational> rand_points(Rng& rng) {
  PointQuad<Rational> q;
  for (auto& p : q.pts) p = rand_vec(rng);
  return q;
}

// Realizable generator: edge vectors of four random points, each rescaled by
// an independent nonzero rational. The inverse scales solve the relation
// system, so these are realizable without being point-derived on the nose.
inline Configuration<Rational> rand_realizable(Rng& rng) {
  Configuration<Rational> c = dets2::config_from_points(rand_points(rng));
  for (std::size_t s = 0; s < 6; ++s) {
    const Rational f = rand_nonzero_rational(rng);
    c.slot(s) = f * c.slot(s);
  }
  return c;
}

// Vanishing fixture: one common direction on the pairs inside {1,2,3},
// another on the pairs touching 4. Its relation system has the nontrivial
// solution (l12, l23, l34, l13, l24, l14) = (0, 0, 1, 0, 1, 1).
inline Configuration<Rational> v_config() {
  const Vec2<Rational> e1{Rational(1), Rational(0)};
  const Vec2<Rational> e2{Rational(0), Rational(1)};
  return Configuration<Rational>({e1, e1, e2, e1, e2, e2});
}

// The companion fixture with the same six vectors rearranged; the form
// evaluates to 1 on it and its relation system has full rank.
inline Configuration<Rational> w_config() {
  const Vec2<Rational> e1{Rational(1), Rational(0)};
  const Vec2<Rational> e2{Rational(0), Rational(1)};
  return Configuration<Rational>({e1, e2, e2, e1, e2, e1});
}

inline Configuration<Rational> zero_config() { return Configuration<Rational>{}; }

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal XML well-formedness scan: every tag closes, nesting balances,
// attribute quotes pair up.
inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  if (text.rfind("<?xml", 0) == 0) {
    pos = text.find("?>");
    if (pos == std::string::npos) return false;
    pos += 2;
  }
  while (true) {
    const std::size_t open = text.find('<', pos);
    if (open == std::string::npos) break;
    const std::size_t close = text.find('>', open);
    if (close == std::string::npos) return false;
    std::string tag = text.substr(open + 1, close - open - 1);
    pos = close + 1;
    if (tag.empty()) return false;
    if (count_occurrences(tag, "\"") % 2 != 0) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;  // self-closing
    const std::size_t name_end = tag.find_first_of(" \t\n");
    stack.push_back(name_end == std::string::npos ? tag : tag.substr(0, name_end));
  }
  return stack.empty();
}

}  // namespace testsupport
