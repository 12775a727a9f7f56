#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/value.hpp"

namespace autoseq {

/// Dirichlet character of modulus k, stored as a table of exponents:
/// chi(n) = exp(2*pi*i * exponent[n mod k] / order), exponent -1 meaning 0.
/// The order is always the least common multiple of the phase denominators.
class DirichletCharacter {
 public:
  /// Validates the character axioms and throws InvalidArgument on failure:
  /// vanishing exactly off the units, chi(1) = 1, and multiplicativity.
  DirichletCharacter(std::uint64_t modulus, std::uint64_t order, std::vector<std::int64_t> exponents);

  /// Builds from explicit phases for every unit residue.
  static DirichletCharacter from_phases(std::uint64_t modulus, const std::map<std::uint64_t, Rational>& phases);

  /// The principal character (1 on units, 0 elsewhere).
  static DirichletCharacter principal(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_principal() const noexcept { return order_ == 1; }

  Value operator()(std::uint64_t n) const;
  Value at(std::int64_t n) const;
  /// -1 when chi(n) = 0.
  std::int64_t exponent(std::uint64_t n) const { return exponents_[n % modulus_]; }
  Rational phase(std::uint64_t n) const;

  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

  bool operator==(const DirichletCharacter&) const = default;

 private:
  struct Unchecked {};
  // tables built from characters by the algebra below skip the homomorphism check
  DirichletCharacter(Unchecked, std::uint64_t modulus, std::uint64_t order, std::vector<std::int64_t> exponents);
  void check_multiplicative() const;

  friend std::vector<DirichletCharacter> characters_mod(std::uint64_t k);
  friend DirichletCharacter induce(const DirichletCharacter& eta, std::uint64_t k);
  friend DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);
  friend std::pair<DirichletCharacter, DirichletCharacter> crt_split(const DirichletCharacter& chi, std::uint64_t k1,
                                                                     std::uint64_t k2);

  std::uint64_t modulus_;
  std::uint64_t order_;
  std::vector<std::int64_t> exponents_;
};

/// Generators of (Z/k)* obtained by CRT-lifting the cyclic generators of each
/// prime-power factor (two generators, -1 and 5, at 2^e with e >= 3).
struct UnitGroupGenerator {
  std::uint64_t residue;  // modulo k
  std::uint64_t order;
};
std::vector<UnitGroupGenerator> unit_group_generators(std::uint64_t k);

/// All phi(k) characters modulo k in a deterministic order; the first one is
/// principal. Generators use the smallest primitive root of each odd prime power.
std::vector<DirichletCharacter> characters_mod(std::uint64_t k);

/// Character mod k induced from eta mod d (d | k), else throws NotDivisible.
DirichletCharacter induce(const DirichletCharacter& eta, std::uint64_t k);

/// Multiplies characters of coprime moduli into one of modulus k1*k2.
DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);

/// Factors chi mod k1*k2 (coprime) as chi_{k1} * chi_{k2}; chi_{k_i}(n) = chi(n_i)
/// with n_i = n mod k_i and n_i = 1 mod the other modulus.
std::pair<DirichletCharacter, DirichletCharacter> crt_split(const DirichletCharacter& chi, std::uint64_t k1,
                                                            std::uint64_t k2);

/// Fitted data of the dense case: coprime h and lambda with a character mod h*lambda.
class DenseData {
 public:
  DenseData(std::uint64_t h, std::uint64_t lambda, DirichletCharacter chi);

  std::uint64_t h() const noexcept { return h_; }
  std::uint64_t lambda() const noexcept { return lambda_; }
  std::uint64_t modulus() const noexcept { return h_ * lambda_; }
  const DirichletCharacter& chi() const noexcept { return chi_; }

  /// Primes dividing h*lambda, ascending.
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  /// alpha(p) = nu_p(h*lambda).
  unsigned alpha(std::uint64_t p) const;
  /// chi_{p^alpha(p)}, the local factor at p.
  const DirichletCharacter& local(std::uint64_t p) const;
  /// chi_{h*lambda / p^alpha(p)}.
  const DirichletCharacter& complement(std::uint64_t p) const;
  /// p-bar residue mod h*lambda.
  std::uint64_t pbar(std::uint64_t p) const;

  /// Membership in the set of integers coprime to h*lambda.
  bool in_coprime_set(std::uint64_t n) const;

 private:
  std::size_t index_of(std::uint64_t p) const;

  std::uint64_t h_;
  std::uint64_t lambda_;
  DirichletCharacter chi_;
  std::vector<std::uint64_t> primes_;
  std::vector<unsigned> alpha_;
  std::vector<DirichletCharacter> local_;
  std::vector<DirichletCharacter> complement_;
  std::vector<std::uint64_t> pbar_;
};

/// Unique residue mod h*lambda with pbar = 1 (mod p^alpha) and pbar = p
/// (mod h*lambda/p^alpha). Throws NotADivisor unless p | h*lambda.
std::uint64_t pbar(std::uint64_t p, const DenseData& dense);

}  // namespace autoseq
