#include "autoseq/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <mutex>
#include <numeric>

#include "autoseq/error.hpp"

namespace autoseq {

HpReal hp_pi() { return boost::math::constants::pi<HpReal>(); }

HpReal HpComplex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

HpComplex to_complex(const Value& v) {
  if (v.is_zero()) return {};
  HpReal scale = HpReal(v.scale().num()) / HpReal(v.scale().den());
  HpReal angle = 2 * hp_pi() * HpReal(v.phase().num()) / HpReal(v.phase().den());
  return {scale * boost::multiprecision::cos(angle), scale * boost::multiprecision::sin(angle)};
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<std::int64_t> div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    const std::size_t pd = poly.size() - 1;
    std::vector<std::int64_t> quot(pd - dd + 1, 0);
    for (std::size_t i = pd + 1; i-- > dd;) {
      std::int64_t c = poly[i];  // div is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, poly);
  return poly;
}

Cyclotomic::Cyclotomic(const Rational& r) : coeffs_{r} {}

Cyclotomic::Cyclotomic(const Value& v) { add_value(v); }

void Cyclotomic::lift_to(std::uint64_t target) {
  const std::uint64_t cur = level();
  if (target == cur) return;
  if (target % cur != 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic level mismatch");
  std::vector<Rational> next(target);
  const std::uint64_t step = target / cur;
  for (std::uint64_t j = 0; j < coeffs_.size(); ++j) next[j * step] = coeffs_[j];
  coeffs_ = std::move(next);
}

void Cyclotomic::add_value(const Value& v, const Rational& count) {
  if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
  if (v.is_zero() || count.is_zero()) return;
  const std::uint64_t den = static_cast<std::uint64_t>(v.phase().den());
  lift_to(std::lcm(level(), den));
  const std::uint64_t idx = static_cast<std::uint64_t>(v.phase().num()) * (level() / den);
  coeffs_[idx] += v.scale() * count;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
  Cyclotomic other = o;
  if (other.coeffs_.empty()) return *this;
  const std::uint64_t l = std::lcm(level(), other.level());
  lift_to(l);
  other.lift_to(l);
  for (std::uint64_t j = 0; j < l; ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += o.scaled(Rational(-1)); }

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic a = *this;
  Cyclotomic b = o;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Cyclotomic(Rational(0));
  const std::uint64_t l = std::lcm(a.level(), b.level());
  a.lift_to(l);
  b.lift_to(l);
  Cyclotomic out;
  out.coeffs_.assign(l, Rational(0));
  for (std::uint64_t i = 0; i < l; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::uint64_t j = 0; j < l; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[(i + j) % l] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  if (coeffs_.empty()) return true;
  const std::uint64_t n = level();
  if (n == 1) return coeffs_[0].is_zero();
  std::vector<std::int64_t> phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<Rational> rem = coeffs_;
  for (std::size_t i = rem.size(); i-- > deg;) {
    Rational c = rem[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) rem[i - deg + j] -= c * Rational(phi[j]);
    }
  }
  for (std::size_t i = 0; i < deg && i < rem.size(); ++i) {
    if (!rem[i].is_zero()) return false;
  }
  return true;
}

HpComplex Cyclotomic::to_complex() const {
  HpComplex acc;
  const std::uint64_t n = level();
  for (std::uint64_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    HpReal c = HpReal(coeffs_[j].num()) / HpReal(coeffs_[j].den());
    HpReal angle = 2 * hp_pi() * HpReal(j) / HpReal(n);
    acc.re += c * boost::multiprecision::cos(angle);
    acc.im += c * boost::multiprecision::sin(angle);
  }
  return acc;
}

Cyclotomic Cyclotomic::sum(const std::vector<Value>& values) {
  Cyclotomic acc(Rational(0));
  for (const auto& v : values) acc.add_value(v);
  return acc;
}

}  // namespace autoseq
