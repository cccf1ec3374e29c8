#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "dets2/errors.hpp"

namespace dets2 {

// Arbitrary-precision integer. Fraction-free elimination outgrows 64 bits
// even for single-digit inputs, so machine integers are not an option.
using BigInt = mpz_class;

// Exact rational scalar, kept canonical at all times:
// gcd(|num|, den) = 1 and den >= 1. Every zero decision in the library runs
// on this type; `double` is the floating realization used only where a
// tolerance is acceptable.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(BigInt n) : q_(std::move(n)) {}

  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw invalid_scalar("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  // Parses "p" or "p/q", base 10.
  static Rational from_string(std::string_view text) {
    try {
      const auto slash = text.find('/');
      if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
      const BigInt num(std::string(text.substr(0, slash)));
      const BigInt den(std::string(text.substr(slash + 1)));
      if (den == 0) throw invalid_scalar("Rational: zero denominator in \"" + std::string(text) + "\"");
      return Rational(num, den);
    } catch (const invalid_scalar&) {
      throw;
    } catch (const std::invalid_argument&) {
      throw invalid_scalar("Rational: cannot parse \"" + std::string(text) + "\"");
    }
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return q_.get_d(); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw invalid_scalar("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

// Scalar requirements shared by the exact and floating realizations.
template <class S>
concept FieldScalar = std::regular<S> && requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  S(0);
  S(1);
};

}  // namespace dets2
