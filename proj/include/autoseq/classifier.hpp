#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "autoseq/character.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

struct Decomposition {
  std::uint64_t p = 2;
  EventuallyPeriodicSeq f1 = EventuallyPeriodicSeq::constant(Value::one());
  MultSpec f2 = FiniteSupport{};
  bool unique = true;  // false iff the input is eventually periodic on [1, H]
  std::uint64_t verified_to = 0;

  TheoremFormSpec spec() const { return {p, f1, f2}; }
};

/// Recovers (f1, f2) for a prime p: f1(k) = a(p^k) probed for every k with
/// p^k < 2^64, f2 = a off the multiples of p. Throws NotMultiplicative,
/// PeriodUndetected or ReconstructionMismatch.
Decomposition decompose(const SequenceOracle& a, std::uint64_t p, std::uint64_t horizon);

/// The input is eventually periodic on [1, H]; every prime is admissible.
struct PeriodicVerdict {
  std::uint64_t horizon = 0;
  bool operator==(const PeriodicVerdict&) const = default;
};

/// The prime p behind a declared base lambda, validated by decompose. Throws
/// NotMultiplicative or CompositeNonPeriodic.
std::variant<std::uint64_t, PeriodicVerdict> find_base_prime(const SequenceOracle& a, std::uint64_t lambda,
                                                             std::uint64_t horizon);

enum class Verdict { Sparse, Dense };

struct Classification {
  Verdict verdict = Verdict::Sparse;
  std::uint64_t modulus = 1;          // the fitting modulus M
  std::uint64_t horizon = 0;
  std::optional<DenseData> dense;     // dense case, character induced to h * lambda
  std::vector<std::uint64_t> support; // sparse case: support within [1, H]
};

inline constexpr std::uint64_t kDefaultModulusBound = 256;

/// Searches M = 1..B: sparse when a vanishes on (1, H] off the multiples of
/// the primes of M, dense when a agrees there with a character mod M. The
/// dense modulus is split into h * lambda with lambda the smallest power of
/// the declared base absorbing its primes (lambda = 1 when the base is 0).
/// Throws NoFit.
Classification classify_sparse_dense(const SequenceOracle& a, std::uint64_t bound, std::uint64_t horizon,
                                     std::uint64_t declared_base = 0);

struct Pass {
  bool operator==(const Pass&) const = default;
};
struct Fail {
  std::uint64_t n = 0;
  bool operator==(const Fail&) const = default;
};
using CheckVerdict = std::variant<Pass, Fail>;

/// a(n) = prod_{p | h lambda} chi_{p^alpha}(n / p^nu) a(p^nu) / chi(pbar)^nu on [1, N].
CheckVerdict dense_product_form_check(const SequenceOracle& a, const DenseData& dense, std::uint64_t bound);

/// n -> chi_{q^alpha}(n / q^nu) a(q^nu) / chi(qbar)^nu, nu = nu_q(n), for n >= 1.
Value periodic_factor(const SequenceOracle& a, const DenseData& dense, std::uint64_t q, std::uint64_t n);

struct FactorPeriod {
  std::uint64_t period = 0;
  std::optional<unsigned> gamma;  // stabilization index of k -> a(q^k)/chi(qbar)^k
  std::uint64_t search_bound = 0;
};
struct FactorFail {
  std::uint64_t n = 0;            // first n with g(n + d) != g(n) for the largest tried d
  std::optional<unsigned> gamma;
  std::uint64_t search_bound = 0;
};
using FactorVerdict = std::variant<FactorPeriod, FactorFail>;

/// Looks for a period d <= q^(gamma + alpha(q)) (d <= N/3 when gamma is not
/// detected) of the factor sequence, confirmed on [1, N]. Gamma needs three
/// equal consecutive values. Throws NotADivisor unless q | h lambda.
FactorVerdict periodic_factor_check(const SequenceOracle& a, const DenseData& dense, std::uint64_t q,
                                    std::uint64_t bound);

/// a(n) = eps^nu_p(n) * chi(n / p^nu_p(n)).
struct CompletelyMultiplicativeForm {
  std::uint64_t p = 2;
  Value eps;
  DirichletCharacter chi = DirichletCharacter::principal(1);
};
/// Support inside the powers of p.
struct PowerSupported {
  std::uint64_t p = 2;
  bool operator==(const PowerSupported&) const = default;
};

/// Throws NotMultiplicative when the complete multiplicativity precheck
/// fails, FormMismatch (with the witness in the message) otherwise.
std::variant<CompletelyMultiplicativeForm, PowerSupported> completely_multiplicative_form(
    const SequenceOracle& a, std::uint64_t horizon, std::uint64_t modulus_bound = kDefaultModulusBound);

struct SparseReport {
  std::vector<std::uint64_t> support;
  std::vector<std::uint64_t> flagged;  // support elements with a prime outside the modulus
  std::map<std::uint64_t, std::vector<unsigned>> exponents;  // q -> {e <= log_q N : a(q^e) != 0}
  std::set<std::uint64_t> p_estimate;  // heuristic
};

/// Support of a in [1, N]. A prime enters the P estimate when its largest
/// non-zero exponent lies in the top quartile of [0, floor(log_q N)].
/// With modulus 0 nothing is flagged.
SparseReport sparse_support_analysis(const SequenceOracle& a, std::uint64_t bound, std::uint64_t modulus = 0);

}  // namespace autoseq
