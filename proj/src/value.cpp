#include "autoseq/value.hpp"

#include "autoseq/error.hpp"

namespace autoseq {

Value Value::unit(const Rational& scale, const Rational& phase) {
  if (scale <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "value scale must be positive");
  Value v;
  v.zero_ = false;
  v.scale_ = scale;
  v.phase_ = phase.frac();
  return v;
}

Value Value::from_int(std::int64_t n) {
  if (n == 0) return zero();
  if (n > 0) return unit(Rational(n), Rational(0));
  return unit(Rational(-n), Rational(1, 2));
}

Value Value::operator*(const Value& o) const {
  if (zero_ || o.zero_) return zero();
  Value v;
  v.zero_ = false;
  v.scale_ = scale_ * o.scale_;
  v.phase_ = (phase_ + o.phase_).frac();
  return v;
}

Value Value::inverse() const {
  if (zero_) throw Error(ErrorKind::InvalidArgument, "inverse of zero value");
  return unit(scale_.reciprocal(), -phase_);
}

Value Value::pow(std::int64_t e) const {
  if (e == 0) return one();
  if (zero_) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power of zero value");
    return zero();
  }
  Value base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Value acc = one();
  while (k != 0) {
    if (k & 1U) acc *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return acc;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.zero_ != b.zero_) return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.zero_) return std::strong_ordering::equal;
  if (auto c = a.scale_ <=> b.scale_; c != 0) return c;
  return a.phase_ <=> b.phase_;
}

std::string Value::str() const {
  if (zero_) return "0";
  const std::string s = scale_.str();
  const bool unit_scale = scale_ == Rational(1);
  if (phase_.is_zero()) return s;
  if (phase_ == Rational(1, 2)) return "-" + s;
  if (phase_ == Rational(1, 4)) return unit_scale ? "i" : s + "*i";
  if (phase_ == Rational(3, 4)) return unit_scale ? "-i" : "-" + s + "*i";
  const std::string e = "e(" + phase_.fraction_str() + ")";
  return unit_scale ? e : s + "*" + e;
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace autoseq
