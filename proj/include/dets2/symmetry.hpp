#pragma once

#include <array>
#include <stdexcept>

#include "dets2/configuration.hpp"

namespace dets2 {

// A permutation of {1,2,3,4}, stored as the image sequence.
class Permutation {
 public:
  explicit Permutation(const std::array<int, 4>& images) : img_(images) {
    std::array<bool, 4> seen{};
    for (const int v : img_) {
      if (v < 1 || v > 4 || seen[v - 1])
        throw std::invalid_argument("Permutation: images must be a bijection of {1,2,3,4}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity() { return Permutation({1, 2, 3, 4}); }

  static Permutation transposition(int a, int b) {
    if (a < 1 || a > 4 || b < 1 || b > 4 || a == b)
      throw std::invalid_argument("Permutation: transposition needs two distinct indices in 1..4");
    std::array<int, 4> img{1, 2, 3, 4};
    std::swap(img[a - 1], img[b - 1]);
    return Permutation(img);
  }

  int operator()(int i) const {
    if (i < 1 || i > 4) throw std::out_of_range("Permutation: index must be in 1..4");
    return img_[i - 1];
  }

  // (-1)^(number of inversions).
  int sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (img_[i] > img_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  Permutation inverse() const {
    std::array<int, 4> inv{};
    for (int i = 1; i <= 4; ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(inv);
  }

  const std::array<int, 4>& images() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Group product fixed by the action law: acting by tau and then by sigma
  // equals one action by compose(sigma, tau). Concretely
  // compose(sigma, tau)(i) = tau(sigma(i)).
  friend Permutation compose(const Permutation& sigma, const Permutation& tau) {
    return Permutation({tau(sigma(1)), tau(sigma(2)), tau(sigma(3)), tau(sigma(4))});
  }

 private:
  std::array<int, 4> img_;
};

// Entrywise linear substitution on V, row-major 2x2.
template <FieldScalar S>
struct LinearMap2 {
  S t11{};
  S t12{};
  S t21{};
  S t22{};

  Vec2<S> apply(const Vec2<S>& v) const { return {t11 * v.x + t12 * v.y, t21 * v.x + t22 * v.y}; }
  S det() const { return t11 * t22 - t12 * t21; }

  static LinearMap2 identity() { return {S(1), S(0), S(0), S(1)}; }
  static LinearMap2 scaling(const S& a) { return {a, S(0), S(0), a}; }
};

// Index relabeling: entry {i,j} of the result is v_{sigma(i), sigma(j)},
// read through the symmetric lookup.
template <FieldScalar S>
Configuration<S> act_permutation(const Permutation& p, const Configuration<S>& c) {
  Configuration<S> out;
  for (const auto& [i, j] : kPairOrder) out.set(i, j, c.at(p(i), p(j)));
  return out;
}

template <FieldScalar S>
Configuration<S> act_linear_map(const LinearMap2<S>& t, const Configuration<S>& c) {
  Configuration<S> out;
  for (std::size_t s = 0; s < 6; ++s) out.slot(s) = t.apply(c.slot(s));
  return out;
}

}  // namespace dets2
