#pragma once

#include <cstdint>
#include <variant>

#include "autoseq/dfao.hpp"

namespace autoseq {

struct Certified {
  std::uint64_t bound = 0;
  bool operator==(const Certified&) const = default;
};

/// f(m * n) != f(m) * f(n); (1, 1) reports f(1) != 1.
struct Counterexample {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  bool operator==(const Counterexample&) const = default;
};

using MultVerdict = std::variant<Certified, Counterexample>;

/// Checks f(1) = 1 and f(mn) = f(m) f(n) for coprime m < n with mn <= N.
/// The counterexample with the smallest product (then smallest m) is reported.
MultVerdict is_multiplicative(const SequenceOracle& f, std::uint64_t bound);

/// Same over all pairs m <= n with mn <= N.
MultVerdict is_completely_multiplicative(const SequenceOracle& f, std::uint64_t bound);

struct PeriodicVerdictF2 {
  std::uint64_t period = 1;
  bool operator==(const PeriodicVerdictF2&) const = default;
};
struct FinitelySupported {
  std::uint64_t bound = 0;  // largest n <= H with f(n) != 0
  bool operator==(const FinitelySupported&) const = default;
};
using Dichotomy = std::variant<PeriodicVerdictF2, FinitelySupported>;

/// For an eventually periodic multiplicative f, decides on [1, H] whether f is
/// periodic from n = 1 or finitely supported. Throws Undetected when no
/// eventual period is visible, or the periodic case fails to hold from 1.
Dichotomy dichotomy_f2(const SequenceOracle& f, std::uint64_t horizon);

}  // namespace autoseq
