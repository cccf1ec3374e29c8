#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "dets2/det_s2.hpp"
#include "dets2/matrix.hpp"

namespace dets2 {

// Multilinear maps V^6 -> k are parametrized by 64 coefficients, one per
// choice of coordinate (x or y) in each of the six slots.
inline constexpr std::size_t kWordCount = 64;
using CoefficientVector = std::array<Rational, kWordCount>;

// Word encoding: bit (5 - s) of the index carries slot s, 1 = y coordinate.
// Index order therefore matches lexicographic order on the slot choices.
constexpr std::size_t word_index(const std::array<std::uint8_t, 6>& beta) {
  std::size_t w = 0;
  for (std::size_t s = 0; s < 6; ++s) w |= static_cast<std::size_t>(beta[s] & 1u) << (5 - s);
  return w;
}

constexpr unsigned word_beta(std::size_t word, std::size_t slot) {
  return static_cast<unsigned>(word >> (5 - slot)) & 1u;
}

// The twelve-term monomial table re-expressed over the 64 words.
inline CoefficientVector canonical_coefficients() {
  CoefficientVector c{};
  for (const auto& t : kDetS2Monomials) c[word_index(t.beta)] = Rational(t.sign);
  return c;
}

// Pairing of a coefficient vector against a configuration:
// sum over words of c_w times the chosen coordinate product.
inline Rational evaluate(const CoefficientVector& coeffs, const Configuration<Rational>& c) {
  Rational total(0);
  for (std::size_t w = 0; w < kWordCount; ++w) {
    if (coeffs[w].is_zero()) continue;
    Rational term = coeffs[w];
    for (std::size_t s = 0; s < 6; ++s) term *= word_beta(w, s) ? c.slot(s).y : c.slot(s).x;
    total += term;
  }
  return total;
}

// Linear constraints forcing a coefficient vector to vanish on every
// configuration whose three slots over a triple {i,j,k} carry one common
// vector. By multilinearity it is enough to put standard basis vectors on
// the three remaining slots; the restriction is then a binary cubic in the
// common vector whose four coefficients must each vanish. One row per
// (triple, basis assignment, cubic monomial): 4 x 8 x 4 rows of 0/1 entries.
inline Matrix<Rational> build_constraint_matrix(std::span<const std::array<int, 3>> triples) {
  Matrix<Rational> m(32 * triples.size(), kWordCount);
  std::size_t r = 0;
  for (const auto& t : triples) {
    const std::array<std::size_t, 3> tslots{pair_slot(t[0], t[1]), pair_slot(t[0], t[2]),
                                            pair_slot(t[1], t[2])};
    std::array<std::size_t, 3> cslots{};
    std::size_t n = 0;
    for (std::size_t s = 0; s < 6; ++s)
      if (std::find(tslots.begin(), tslots.end(), s) == tslots.end()) cslots[n++] = s;

    for (unsigned assign = 0; assign < 8; ++assign) {
      for (unsigned deg = 0; deg < 4; ++deg, ++r) {  // coefficient of x^(3-deg) y^deg
        for (std::size_t w = 0; w < kWordCount; ++w) {
          bool match = true;
          for (std::size_t b = 0; b < 3 && match; ++b)
            match = word_beta(w, cslots[b]) == ((assign >> b) & 1u);
          if (!match) continue;
          unsigned y_count = 0;
          for (const auto s : tslots) y_count += word_beta(w, s);
          if (y_count == deg) m(r, w) = Rational(1);
        }
      }
    }
  }
  return m;
}

inline Matrix<Rational> build_constraint_matrix() {
  return build_constraint_matrix(std::span<const std::array<int, 3>>(kTriples));
}

struct UniquenessResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t dimension = 0;  // nullity of the constraint matrix
  // Present iff dimension == 1; scaled so the first nonzero entry is +1.
  std::optional<CoefficientVector> generator;
};

// Computes the space of multilinear maps vanishing on all equal-triple
// configurations. Expected outcome: dimension 1, generated by the
// twelve-term table up to one global sign.
inline UniquenessResult solve_uniqueness() {
  const auto m = build_constraint_matrix();
  const auto rn = rank_and_nullspace(m);
  UniquenessResult out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.rank = rn.rank;
  out.dimension = rn.kernel.size();
  if (out.dimension == 1) {
    const auto& k = rn.kernel[0];
    Rational lead(0);
    for (const auto& x : k)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    CoefficientVector g{};
    for (std::size_t i = 0; i < kWordCount; ++i) g[i] = k[i] / lead;
    out.generator = g;
  }
  return out;
}

}  // namespace dets2
