#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "autoseq/classifier.hpp"
#include "autoseq/cyclotomic.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

/// Exact mean M(f2) * sum_k f1(k) / p^k; M(f2) = 0 for a finite support.
Cyclotomic mean_formula_exact(const TheoremFormSpec& spec);
HpComplex mean_formula(const TheoremFormSpec& spec);

/// (1/N) sum_{n=1}^N a(n), exact.
Cyclotomic empirical_mean_exact(const SequenceOracle& a, std::uint64_t count);
HpComplex empirical_mean(const SequenceOracle& a, std::uint64_t count);

struct MeanReport {
  HpComplex formula;
  HpComplex empirical;
  std::uint64_t count = 0;
  HpReal discrepancy = 0;
};
MeanReport mean_report(const TheoremFormSpec& spec, std::uint64_t count);

/// Rows (N, re, im, |error|) for N = 10, 100, ... up to count.
std::vector<MeanReport> mean_trace(const TheoremFormSpec& spec, std::uint64_t count);

/// a(n + s*p*n*c) = a(n) for 1 <= n <= N, 1 <= s <= S; Fail carries n.
CheckVerdict toeplitz_check(const SequenceOracle& a, std::uint64_t p, std::uint64_t c, std::uint64_t bound,
                            std::uint64_t steps);

struct DensityPoint {
  std::uint64_t limit = 0;  // 10^j
  std::uint64_t count = 0;
  double density = 0;
};
struct DensityCurve {
  std::vector<DensityPoint> points;
  bool not_decreasing = false;  // some decade fails to drop strictly
};
DensityCurve support_density(const SequenceOracle& a, std::uint64_t bound);

struct FactorStats {
  std::size_t length = 0;
  std::size_t distinct = 0;
  std::uint64_t max_gap = 0;  // over tracked factors, counting the lead-in and tail runs
};

struct ComplexityReport {
  std::vector<FactorStats> rows;  // length 1..L
  std::uint64_t gap_limit = 0;
  std::uint64_t tracked_prefix = 0;  // gaps are taken for factors first seen at a start <= this
  bool bounded_gaps = true;          // every max_gap <= gap_limit
};

/// Factors of a(1..N). gap_limit = 0 selects N / 4, tracked_prefix = 0
/// selects N / 100.
ComplexityReport word_complexity(const SequenceOracle& a, std::size_t max_length, std::uint64_t bound,
                                 std::uint64_t gap_limit = 0, std::uint64_t tracked_prefix = 0);

void write_density_csv(std::ostream& os, const DensityCurve& curve);
void write_complexity_csv(std::ostream& os, const ComplexityReport& report);
void write_mean_csv(std::ostream& os, const std::vector<MeanReport>& trace);

/// Fixed-point rendering with the given number of decimals.
std::string format_hp(const HpReal& x, int digits = 12);

}  // namespace autoseq
