#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <utility>

#include "dets2/errors.hpp"
#include "dets2/rational.hpp"

namespace dets2 {

template <FieldScalar S>
struct Vec2 {
  S x{};
  S y{};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

template <FieldScalar S>
Vec2<S> operator*(const S& a, const Vec2<S>& v) {
  return {a * v.x, a * v.y};
}

template <FieldScalar S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

// Determinant of the 2x2 matrix with a and b as columns.
template <FieldScalar S>
S cross(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Vec2<S>& v) {
  return os << "(" << v.x << ", " << v.y << ")";
}

// The six unordered pairs {i,j} of {1,2,3,4} in storage order.
inline constexpr std::array<std::pair<int, int>, 6> kPairOrder{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// The four triples i < j < k.
inline constexpr std::array<std::array<int, 3>, 4> kTriples{
    {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};

// Column order of the lambda unknowns in the relation system:
// (l12, l23, l34, l13, l24, l14).
inline constexpr std::array<std::pair<int, int>, 6> kLambdaPairs{
    {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}}};

// Storage slot backing each lambda column, and the lambda column of each
// storage slot. (The two mappings happen to coincide; they are kept separate
// so either order can change independently.)
inline constexpr std::array<std::size_t, 6> kLambdaColToSlot{0, 3, 5, 1, 4, 2};
inline constexpr std::array<std::size_t, 6> kSlotToLambdaCol{0, 3, 5, 1, 4, 2};

// Storage slot of the unordered pair {i,j}; indices 1-based.
constexpr std::size_t pair_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 4 || i == j) throw shape_error("pair_slot: indices must be distinct and within 1..4");
  return static_cast<std::size_t>((i - 1) * (8 - i) / 2 + (j - i - 1));
}

// An element of V^6: one direction vector per unordered pair {i,j}.
// Lookup is symmetric: at(i, j) with i > j returns the {j,i} entry.
template <FieldScalar S>
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::array<Vec2<S>, 6> slots) : v_(std::move(slots)) {}

  const Vec2<S>& at(int i, int j) const { return v_[pair_slot(i, j)]; }
  void set(int i, int j, Vec2<S> value) { v_[pair_slot(i, j)] = std::move(value); }

  Vec2<S>& slot(std::size_t s) { return v_[s]; }
  const Vec2<S>& slot(std::size_t s) const { return v_[s]; }
  const std::array<Vec2<S>, 6>& slots() const { return v_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::array<Vec2<S>, 6> v_{};
};

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Configuration<S>& c) {
  for (std::size_t s = 0; s < 6; ++s) {
    const auto& [i, j] = kPairOrder[s];
    os << (s == 0 ? "" : " ") << "v" << i << j << "=" << c.slot(s);
  }
  return os;
}

}  // namespace dets2
