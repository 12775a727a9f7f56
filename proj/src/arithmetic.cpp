#include "autoseq/arithmetic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "autoseq/error.hpp"

namespace autoseq {

std::uint64_t PrimePower::value() const { return ipow(prime, exponent); }

unsigned nu(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "valuation base must be a prime");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t strip_prime(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  while (n % p == 0) n /= p;
  return n;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  base %= m;
  while (e != 0) {
    if (e & 1U) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return acc;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factor of zero");
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) {
    if (!out.empty() && out.back().prime == n) {
      ++out.back().exponent;
    } else {
      out.push_back({n, 1});
    }
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pp : factor(n)) r *= pp.prime;
  return r;
}

bool as_prime_power(std::uint64_t n, PrimePower& out) {
  if (n < 2) return false;
  auto f = factor(n);
  if (f.size() != 1) return false;
  out = f.front();
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& pp : factor(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && acc > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorKind::Overflow, "integer power exceeds 64 bits");
    }
    acc *= base;
  }
  return acc;
}

std::uint64_t mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  unsigned __int128 v = static_cast<unsigned __int128>(a) * b + c;
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::Overflow, "index exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::pair<__int128, __int128>{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair<__int128, __int128>{new_r, r - q * new_r};
  }
  if (r != 1) throw Error(ErrorKind::NotCoprime, "no modular inverse");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t crt(std::uint64_t a1, std::uint64_t m1, std::uint64_t a2, std::uint64_t m2) {
  if (std::gcd(m1, m2) != 1) throw Error(ErrorKind::NotCoprime, "CRT moduli are not coprime");
  const std::uint64_t m = m1 * m2;
  a1 %= m1;
  a2 %= m2;
  // x = a1 + m1 * t with t = (a2 - a1) * m1^{-1} mod m2
  std::uint64_t diff = (a2 + m2 - a1 % m2) % m2;
  std::uint64_t t = mul_mod(diff, inverse_mod(m1 % m2, m2), m2);
  return (a1 + m1 * t) % m;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw Error(ErrorKind::NotCoprime, "order of a non-unit");
  std::uint64_t ord = euler_phi(m);
  for (const auto& pp : factor(ord)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow_mod(a, ord / pp.prime, m) == 1) {
        ord /= pp.prime;
      } else {
        break;
      }
    }
  }
  return ord;
}

std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned e) {
  const std::uint64_t m = ipow(p, e);
  if (m == 2) return 1;
  if (m == 4) return 3;
  if (p == 2) throw Error(ErrorKind::InvalidArgument, "(Z/2^e)* is not cyclic for e >= 3");
  const std::uint64_t phi = euler_phi(m);
  for (std::uint64_t g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, m) == phi) return g;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive root");
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : factor(n)) {
    const std::size_t base = out.size();
    std::uint64_t q = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace autoseq
