#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace autoseq {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

/// p-adic valuation: the largest e with p^e | n. Requires p prime, n >= 1.
unsigned nu(std::uint64_t p, std::uint64_t n);

/// n / p^{nu_p(n)}.
std::uint64_t strip_prime(std::uint64_t p, std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes. factor(1) is empty.
std::vector<PrimePower> factor(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

/// If n = q^e for a prime q and e >= 1, returns that prime power.
bool as_prime_power(std::uint64_t n, PrimePower& out);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Checked power; throws ErrorKind::Overflow.
std::uint64_t ipow(std::uint64_t base, unsigned e);
/// Checked a*b + c; throws ErrorKind::Overflow.
std::uint64_t mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// The unique x mod m1*m2 with x = a1 (mod m1), x = a2 (mod m2). Requires coprime moduli.
std::uint64_t crt(std::uint64_t a1, std::uint64_t m1, std::uint64_t a2, std::uint64_t m2);

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo p^e for an odd prime p, or modulo 2 and 4.
std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned e);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace autoseq
