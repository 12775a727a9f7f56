#include "autoseq/multiplicativity.hpp"

#include <numeric>
#include <vector>

#include "autoseq/error.hpp"
#include "autoseq/periodicity.hpp"
#include "autoseq/scan.hpp"

namespace autoseq {

namespace {

MultVerdict check_pairs(const SequenceOracle& f, std::uint64_t bound, bool coprime_only) {
  if (bound < 2) throw Error(ErrorKind::InvalidArgument, "multiplicativity bound must be at least 2");
  std::vector<Value> a(bound + 1);
  for (std::uint64_t n = 1; n <= bound; ++n) a[n] = f(n);
  if (!a[1].is_one()) return Counterexample{1, 1};
  auto witness = [&](std::uint64_t k) -> std::uint64_t {
    for (std::uint64_t m = 2; m * m <= k; ++m) {
      if (k % m != 0) continue;
      const std::uint64_t n = k / m;
      if (coprime_only && (m == n || std::gcd(m, n) != 1)) continue;
      if (a[k] != a[m] * a[n]) return m;
    }
    return 0;
  };
  const auto k = first_failure(4, bound, [&](std::uint64_t k) { return witness(k) == 0; });
  if (!k) return Certified{bound};
  const std::uint64_t m = witness(*k);
  return Counterexample{m, *k / m};
}

}  // namespace

MultVerdict is_multiplicative(const SequenceOracle& f, std::uint64_t bound) { return check_pairs(f, bound, true); }

MultVerdict is_completely_multiplicative(const SequenceOracle& f, std::uint64_t bound) {
  return check_pairs(f, bound, false);
}

Dichotomy dichotomy_f2(const SequenceOracle& f, std::uint64_t horizon) {
  std::vector<Value> seq(horizon);
  for (std::uint64_t n = 1; n <= horizon; ++n) seq[n - 1] = f(n);
  const auto ep = eventual_period_detect(seq);
  if (!ep) throw Error(ErrorKind::Undetected, "no eventual period within " + std::to_string(horizon) + " terms");
  bool zero_tail = true;
  for (std::size_t i = ep->preperiod; i < ep->preperiod + ep->period; ++i) zero_tail = zero_tail && seq[i].is_zero();
  if (zero_tail) {
    std::uint64_t last = 0;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      if (!seq[n - 1].is_zero()) last = n;
    }
    return FinitelySupported{last};
  }
  const std::uint64_t d = ep->period;
  for (std::uint64_t n = 1; n + d <= horizon; ++n) {
    if (seq[n - 1 + d] != seq[n - 1]) {
      throw Error(ErrorKind::Undetected, "eventual period " + std::to_string(d) + " does not hold from n = 1 (n = " +
                                             std::to_string(n) + ")");
    }
  }
  return PeriodicVerdictF2{d};
}

}  // namespace autoseq
