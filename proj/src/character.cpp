#include "autoseq/character.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"

namespace autoseq {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t compute_pbar(std::uint64_t p, unsigned alpha, std::uint64_t modulus) {
  const std::uint64_t local = ipow(p, alpha);
  return crt(1, local, p, modulus / local);
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t order,
                                       std::vector<std::int64_t> exponents) {
  if (modulus == 0 || order == 0) throw Error(ErrorKind::InvalidArgument, "character modulus and order must be positive");
  if (exponents.size() != modulus) throw Error(ErrorKind::InvalidArgument, "character table size differs from modulus");
  for (std::uint64_t r = 0; r < modulus; ++r) {
    const bool unit = std::gcd(r, modulus) == 1;
    if (!unit && exponents[r] != -1) throw Error(ErrorKind::InvalidArgument, "character must vanish off the units");
    if (unit && exponents[r] < 0) throw Error(ErrorKind::InvalidArgument, "character must not vanish on a unit");
  }
  *this = DirichletCharacter(Unchecked{}, modulus, order, std::move(exponents));
  if (exponents_[1 % modulus_] != 0) throw Error(ErrorKind::InvalidArgument, "character must satisfy chi(1) = 1");
  check_multiplicative();
}

DirichletCharacter::DirichletCharacter(Unchecked, std::uint64_t modulus, std::uint64_t order,
                                       std::vector<std::int64_t> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)) {
  const auto ord = static_cast<std::int64_t>(order_);
  std::int64_t g = ord;
  for (auto& e : exponents_) {
    if (e < 0) continue;
    if (e >= ord) e %= ord;
    if (g > 1 && e % g != 0) g = std::gcd(g, e);
  }
  if (g > 1) {
    for (auto& e : exponents_) {
      if (e > 0) e /= g;
    }
    order_ /= static_cast<std::uint64_t>(g);
  }
}

void DirichletCharacter::check_multiplicative() const {
  // A unit-group function that is multiplicative against every generator is a homomorphism.
  const auto ord = static_cast<std::int64_t>(order_);
  for (const auto& gen : unit_group_generators(modulus_)) {
    const std::int64_t eg = exponents_[gen.residue];
    for (std::uint64_t r = 0; r < modulus_; ++r) {
      const std::int64_t er = exponents_[r];
      if (er < 0) continue;
      if (exponents_[mul_mod(gen.residue, r, modulus_)] != (eg + er) % ord) {
        throw Error(ErrorKind::InvalidArgument, "character table is not multiplicative");
      }
    }
  }
}

DirichletCharacter DirichletCharacter::from_phases(std::uint64_t modulus, const std::map<std::uint64_t, Rational>& phases) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "character modulus must be positive");
  std::uint64_t order = 1;
  for (const auto& [r, ph] : phases) order = std::lcm(order, static_cast<std::uint64_t>(ph.frac().den()));
  std::vector<std::int64_t> exps(modulus, -1);
  for (const auto& [r, ph] : phases) {
    if (r >= modulus) throw Error(ErrorKind::InvalidArgument, "character residue out of range");
    Rational f = ph.frac();
    exps[r] = f.num() * (static_cast<std::int64_t>(order) / f.den());
  }
  return DirichletCharacter(modulus, order, std::move(exps));
}

DirichletCharacter DirichletCharacter::principal(std::uint64_t modulus) {
  std::vector<std::int64_t> exps(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) exps[r] = std::gcd(r, modulus) == 1 ? 0 : -1;
  return DirichletCharacter(modulus, 1, std::move(exps));
}

Value DirichletCharacter::operator()(std::uint64_t n) const {
  const std::int64_t e = exponents_[n % modulus_];
  if (e < 0) return Value::zero();
  return Value::root_of_unity(Rational(e, static_cast<std::int64_t>(order_)));
}

Value DirichletCharacter::at(std::int64_t n) const {
  return (*this)(static_cast<std::uint64_t>(floor_mod(n, static_cast<std::int64_t>(modulus_))));
}

Rational DirichletCharacter::phase(std::uint64_t n) const {
  const std::int64_t e = exponents_[n % modulus_];
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "phase of a zero character value");
  return Rational(e, static_cast<std::int64_t>(order_));
}

std::vector<UnitGroupGenerator> unit_group_generators(std::uint64_t k) {
  std::vector<UnitGroupGenerator> gens;
  for (const auto& pp : factor(k)) {
    const std::uint64_t q = pp.value();
    const std::uint64_t rest = k / q;
    auto lift = [&](std::uint64_t g, std::uint64_t order) { gens.push_back({crt(g, q, 1, rest), order}); };
    if (pp.prime == 2) {
      if (pp.exponent == 2) lift(3, 2);
      if (pp.exponent >= 3) {
        lift(q - 1, 2);
        lift(5, q / 4);
      }
    } else {
      lift(smallest_primitive_root(pp.prime, pp.exponent), q / pp.prime * (pp.prime - 1));
    }
  }
  return gens;
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  const auto gens = unit_group_generators(k);
  // coordinates of every unit as exponents of the generators
  std::vector<std::uint64_t> units{1 % k};
  std::vector<std::vector<std::uint64_t>> coords{std::vector<std::uint64_t>(gens.size(), 0)};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t base = units.size();
    std::uint64_t gp = 1;
    for (std::uint64_t t = 1; t < gens[i].order; ++t) {
      gp = mul_mod(gp, gens[i].residue, k);
      for (std::size_t j = 0; j < base; ++j) {
        units.push_back(mul_mod(units[j], gp, k));
        auto c = coords[j];
        c[i] = t;
        coords.push_back(std::move(c));
      }
    }
  }
  std::uint64_t lcm_order = 1;
  for (const auto& g : gens) lcm_order = std::lcm(lcm_order, g.order);

  // basis[i][u]: exponent of unit u under the character sending gens[i] to e(1/order_i)
  std::vector<std::vector<std::uint64_t>> basis(gens.size(), std::vector<std::uint64_t>(units.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t u = 0; u < units.size(); ++u) basis[i][u] = coords[u][i] * (lcm_order / gens[i].order);
  }
  std::uint64_t count = 1;
  for (const auto& g : gens) count *= g.order;
  std::vector<DirichletCharacter> out;
  out.reserve(count);
  std::vector<std::int64_t> exps(k, -1);
  // the first generator's exponent varies fastest
  std::function<void(std::size_t, std::vector<std::uint64_t>&)> emit = [&](std::size_t level,
                                                                           std::vector<std::uint64_t>& acc) {
    if (level == 0) {
      for (std::size_t u = 0; u < units.size(); ++u) exps[units[u]] = static_cast<std::int64_t>(acc[u]);
      out.push_back(DirichletCharacter(DirichletCharacter::Unchecked{}, k, lcm_order, exps));
      return;
    }
    const std::size_t i = level - 1;
    std::vector<std::uint64_t> cur = acc;
    for (std::uint64_t t = 0; t < gens[i].order; ++t) {
      emit(i, cur);
      for (std::size_t u = 0; u < units.size(); ++u) {
        cur[u] += basis[i][u];
        if (cur[u] >= lcm_order) cur[u] -= lcm_order;
      }
    }
  };
  std::vector<std::uint64_t> zero(units.size(), 0);
  emit(gens.size(), zero);
  return out;
}

DirichletCharacter induce(const DirichletCharacter& eta, std::uint64_t k) {
  if (k == 0 || k % eta.modulus() != 0) {
    throw Error(ErrorKind::NotDivisible, "inducing modulus must be a multiple of the character modulus");
  }
  std::vector<std::int64_t> exps(k, -1);
  for (std::uint64_t n = 0; n < k; ++n) {
    if (std::gcd(n, k) == 1) exps[n] = eta.exponent(n);
  }
  return DirichletCharacter(DirichletCharacter::Unchecked{}, k, eta.order(), std::move(exps));
}

DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (std::gcd(a.modulus(), b.modulus()) != 1) throw Error(ErrorKind::NotCoprime, "character moduli are not coprime");
  const std::uint64_t k = a.modulus() * b.modulus();
  const std::uint64_t order = std::lcm(a.order(), b.order());
  const auto sa = static_cast<std::int64_t>(order / a.order());
  const auto sb = static_cast<std::int64_t>(order / b.order());
  std::vector<std::int64_t> exps(k, -1);
  for (std::uint64_t n = 0; n < k; ++n) {
    const std::int64_t ea = a.exponent(n);
    const std::int64_t eb = b.exponent(n);
    if (ea >= 0 && eb >= 0) exps[n] = (ea * sa + eb * sb) % static_cast<std::int64_t>(order);
  }
  return DirichletCharacter(DirichletCharacter::Unchecked{}, k, order, std::move(exps));
}

std::pair<DirichletCharacter, DirichletCharacter> crt_split(const DirichletCharacter& chi, std::uint64_t k1,
                                                            std::uint64_t k2) {
  if (k1 == 0 || k2 == 0 || std::gcd(k1, k2) != 1) throw Error(ErrorKind::NotCoprime, "split moduli must be coprime");
  if (chi.modulus() != k1 * k2) throw Error(ErrorKind::InvalidArgument, "split moduli must multiply to the character modulus");
  const std::uint64_t k = k1 * k2;
  auto part = [&](std::uint64_t ki, std::uint64_t other) {
    // crt(n, ki, 1, other) = n * e + f mod k, stepped additively
    const std::uint64_t e = crt(1, ki, 0, other);
    const std::uint64_t f = crt(0, ki, 1, other);
    std::vector<std::int64_t> exps(ki);
    const auto& table = chi.exponents();
    std::uint64_t idx = f;
    for (std::uint64_t n = 0; n < ki; ++n) {
      exps[n] = table[idx];
      idx += e;
      if (idx >= k) idx -= k;
    }
    return DirichletCharacter(DirichletCharacter::Unchecked{}, ki, chi.order(), std::move(exps));
  };
  return {part(k1, k2), part(k2, k1)};
}

DenseData::DenseData(std::uint64_t h, std::uint64_t lambda, DirichletCharacter chi)
    : h_(h), lambda_(lambda), chi_(std::move(chi)) {
  if (h_ == 0 || lambda_ == 0) throw Error(ErrorKind::InvalidArgument, "h and lambda must be positive");
  if (std::gcd(h_, lambda_) != 1) throw Error(ErrorKind::NotCoprime, "h and lambda must be coprime");
  if (chi_.modulus() != modulus()) throw Error(ErrorKind::InvalidArgument, "dense character must have modulus h*lambda");
  for (const auto& pp : factor(modulus())) {
    const std::uint64_t local = pp.value();
    auto [chi_p, chi_rest] = crt_split(chi_, local, modulus() / local);
    primes_.push_back(pp.prime);
    alpha_.push_back(pp.exponent);
    local_.push_back(std::move(chi_p));
    complement_.push_back(std::move(chi_rest));
    pbar_.push_back(compute_pbar(pp.prime, pp.exponent, modulus()));
  }
}

std::size_t DenseData::index_of(std::uint64_t p) const {
  auto it = std::find(primes_.begin(), primes_.end(), p);
  if (it == primes_.end()) throw Error(ErrorKind::NotADivisor, "prime does not divide h*lambda");
  return static_cast<std::size_t>(it - primes_.begin());
}

unsigned DenseData::alpha(std::uint64_t p) const { return alpha_[index_of(p)]; }
const DirichletCharacter& DenseData::local(std::uint64_t p) const { return local_[index_of(p)]; }
const DirichletCharacter& DenseData::complement(std::uint64_t p) const { return complement_[index_of(p)]; }
std::uint64_t DenseData::pbar(std::uint64_t p) const { return pbar_[index_of(p)]; }

bool DenseData::in_coprime_set(std::uint64_t n) const { return std::gcd(n, modulus()) == 1; }

std::uint64_t pbar(std::uint64_t p, const DenseData& dense) {
  if (!is_prime(p) || dense.modulus() % p != 0) throw Error(ErrorKind::NotADivisor, "prime does not divide h*lambda");
  return compute_pbar(p, nu(p, dense.modulus()), dense.modulus());
}

}  // namespace autoseq
