#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/value.hpp"

namespace autoseq {

/// 50 significant decimal digits.
using HpReal = boost::multiprecision::cpp_dec_float_50;

struct HpComplex {
  HpReal re = 0;
  HpReal im = 0;

  HpComplex operator+(const HpComplex& o) const { return {re + o.re, im + o.im}; }
  HpComplex operator-(const HpComplex& o) const { return {re - o.re, im - o.im}; }
  HpComplex operator*(const HpComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  HpReal abs() const;
};

HpComplex to_complex(const Value& v);
HpReal hp_pi();

/// Exact element of the cyclotomic field Q(zeta_N), stored as rational
/// coefficients of 1, zeta_N, ..., zeta_N^{N-1}. The representation is not
/// unique (the powers are linearly dependent); `is_zero` reduces modulo the
/// N-th cyclotomic polynomial, so equality is exact.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(const Value& v);

  /// Current level N.
  std::uint64_t level() const noexcept { return coeffs_.empty() ? 1 : coeffs_.size(); }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator+(const Cyclotomic& o) const { return Cyclotomic(*this) += o; }
  Cyclotomic operator-(const Cyclotomic& o) const { return Cyclotomic(*this) -= o; }
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(const Rational& r) const;

  /// Adds `count * v` without building an intermediate.
  void add_value(const Value& v, const Rational& count = Rational(1));

  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

  HpComplex to_complex() const;

  /// Sum of a multiset of values, each taken once.
  static Cyclotomic sum(const std::vector<Value>& values);

 private:
  void lift_to(std::uint64_t level);

  std::vector<Rational> coeffs_;  // size == level, or empty for the zero element
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

}  // namespace autoseq
