#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "autoseq/rational.hpp"

namespace autoseq {

/// Exact sequence value: either zero or `scale * exp(2*pi*i*phase)` with a
/// positive rational scale and a rational phase in [0, 1). Values form a
/// multiplicative monoid; there is no addition (sums live in Cyclotomic).
class Value {
 public:
  /// Zero.
  Value() = default;

  static Value zero() { return Value(); }
  static Value one() { return unit(Rational(1), Rational(0)); }
  static Value root_of_unity(const Rational& phase) { return unit(Rational(1), phase); }
  /// Throws InvalidArgument unless scale > 0. The phase is reduced mod 1.
  static Value unit(const Rational& scale, const Rational& phase);
  /// Integer shorthand: 0, a positive integer, or minus a positive integer.
  static Value from_int(std::int64_t n);

  bool is_zero() const noexcept { return zero_; }
  bool is_one() const noexcept { return !zero_ && scale_ == Rational(1) && phase_.is_zero(); }
  /// Root of unity (unit scale).
  bool is_unimodular() const noexcept { return !zero_ && scale_ == Rational(1); }

  /// Scale and phase of a non-zero value (zero reports scale 0, phase 0).
  const Rational& scale() const noexcept { return scale_; }
  const Rational& phase() const noexcept { return phase_; }

  Value operator*(const Value& o) const;
  Value& operator*=(const Value& o) { return *this = *this * o; }
  /// Throws InvalidArgument on zero.
  Value inverse() const;
  Value operator/(const Value& o) const { return *this * o.inverse(); }
  /// Negative exponents require a non-zero value; 0^0 = 1.
  Value pow(std::int64_t e) const;

  friend bool operator==(const Value&, const Value&) = default;
  /// Total order: zero first, then by scale, then by phase.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  /// Human-readable form: 0, 1, -1, i, -i, 2, -1/2, 3*i, e(1/3), 2*e(1/6).
  std::string str() const;

 private:
  bool zero_ = true;
  Rational scale_{0};
  Rational phase_{0};
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace autoseq
