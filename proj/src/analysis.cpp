#include "autoseq/analysis.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"
#include "autoseq/scan.hpp"

namespace autoseq {

Cyclotomic mean_formula_exact(const TheoremFormSpec& spec) {
  validate(spec);
  const auto* pm = std::get_if<PeriodicMult>(&spec.f2);
  if (pm == nullptr) return Cyclotomic(Rational(0));
  Cyclotomic mf2(Rational(0));
  for (std::uint64_t r = 1; r <= pm->period(); ++r) mf2.add_value((*pm)(r));
  mf2 = mf2.scaled(Rational(1, static_cast<std::int64_t>(pm->period())));

  const auto p = static_cast<std::int64_t>(spec.p);
  Cyclotomic series(Rational(0));
  Rational weight(1);
  for (const auto& v : spec.f1.preperiod()) {
    series.add_value(v, weight);
    weight /= Rational(p);
  }
  // the periodic tail is a geometric series with ratio p^-|period|
  Cyclotomic block(Rational(0));
  Rational inner(1);
  for (const auto& v : spec.f1.period()) {
    block.add_value(v, inner);
    inner /= Rational(p);
  }
  series += block.scaled(weight / (Rational(1) - inner));
  return mf2 * series;
}

HpComplex mean_formula(const TheoremFormSpec& spec) { return mean_formula_exact(spec).to_complex(); }

Cyclotomic empirical_mean_exact(const SequenceOracle& a, std::uint64_t count) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "mean over an empty range");
  std::map<Value, std::int64_t> tally;
  for (std::uint64_t n = 1; n <= count; ++n) ++tally[a(n)];
  Cyclotomic acc(Rational(0));
  for (const auto& [v, c] : tally) acc.add_value(v, Rational(c));
  return acc.scaled(Rational(1, static_cast<std::int64_t>(count)));
}

HpComplex empirical_mean(const SequenceOracle& a, std::uint64_t count) {
  return empirical_mean_exact(a, count).to_complex();
}

MeanReport mean_report(const TheoremFormSpec& spec, std::uint64_t count) {
  MeanReport r;
  r.formula = mean_formula(spec);
  r.empirical = empirical_mean(theorem_form(spec), count);
  r.count = count;
  r.discrepancy = (r.formula - r.empirical).abs();
  return r;
}

std::vector<MeanReport> mean_trace(const TheoremFormSpec& spec, std::uint64_t count) {
  const HpComplex formula = mean_formula(spec);
  const auto a = theorem_form(spec);
  std::vector<MeanReport> out;
  std::map<Value, std::int64_t> tally;
  std::uint64_t next = 10;
  for (std::uint64_t n = 1; n <= count; ++n) {
    ++tally[a(n)];
    if (n == next || n == count) {
      Cyclotomic acc(Rational(0));
      for (const auto& [v, c] : tally) acc.add_value(v, Rational(c));
      MeanReport r;
      r.formula = formula;
      r.empirical = acc.scaled(Rational(1, static_cast<std::int64_t>(n))).to_complex();
      r.count = n;
      r.discrepancy = (formula - r.empirical).abs();
      out.push_back(r);
      if (n == next) next *= 10;
    }
  }
  return out;
}

CheckVerdict toeplitz_check(const SequenceOracle& a, std::uint64_t p, std::uint64_t c, std::uint64_t bound,
                            std::uint64_t steps) {
  const auto bad = first_failure(1, bound, [&](std::uint64_t n) {
    const Value v = a(n);
    const std::uint64_t stride = mul_add(mul_add(p, n, 0), c, 0);
    for (std::uint64_t s = 1; s <= steps; ++s) {
      if (a(mul_add(s, stride, n)) != v) return false;
    }
    return true;
  });
  if (bad) return Fail{*bad};
  return Pass{};
}

DensityCurve support_density(const SequenceOracle& a, std::uint64_t bound) {
  DensityCurve curve;
  std::uint64_t count = 0;
  std::uint64_t limit = 10;
  for (std::uint64_t n = 1; n <= bound && limit <= bound; ++n) {
    if (!a(n).is_zero()) ++count;
    if (n == limit) {
      const double density = static_cast<double>(count) / static_cast<double>(limit);
      if (!curve.points.empty() && density >= curve.points.back().density) curve.not_decreasing = true;
      curve.points.push_back({limit, count, density});
      if (limit > bound / 10) break;
      limit *= 10;
    }
  }
  return curve;
}

ComplexityReport word_complexity(const SequenceOracle& a, std::size_t max_length, std::uint64_t bound,
                                 std::uint64_t gap_limit, std::uint64_t tracked_prefix) {
  ComplexityReport report;
  report.gap_limit = gap_limit == 0 ? std::max<std::uint64_t>(1, bound / 4) : gap_limit;
  report.tracked_prefix = tracked_prefix == 0 ? std::max<std::uint64_t>(1, bound / 100) : tracked_prefix;
  std::vector<Value> seq(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) seq[n - 1] = a(n);
  for (std::size_t len = 1; len <= max_length && len <= bound; ++len) {
    const std::uint64_t starts = bound - len + 1;
    struct Seen {
      std::uint64_t first_seen, last, gap;
    };
    std::map<std::vector<Value>, Seen> seen;
    for (std::uint64_t i = 0; i < starts; ++i) {
      std::vector<Value> w(seq.begin() + static_cast<std::ptrdiff_t>(i),
                           seq.begin() + static_cast<std::ptrdiff_t>(i + len));
      const std::uint64_t pos = i + 1;
      auto [it, fresh] = seen.try_emplace(std::move(w), Seen{pos, pos, pos});
      if (!fresh) {
        it->second.gap = std::max(it->second.gap, pos - it->second.last);
        it->second.last = pos;
      }
    }
    FactorStats row;
    row.length = len;
    row.distinct = seen.size();
    for (const auto& [w, st] : seen) {
      if (st.first_seen > report.tracked_prefix) continue;
      row.max_gap = std::max({row.max_gap, st.gap, starts + 1 - st.last});
    }
    if (row.max_gap > report.gap_limit) report.bounded_gaps = false;
    report.rows.push_back(row);
  }
  return report;
}

std::string format_hp(const HpReal& x, int digits) {
  std::ostringstream os;
  HpReal v = x;
  if (boost::multiprecision::abs(v) < HpReal("1e-40")) v = 0;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void write_density_csv(std::ostream& os, const DensityCurve& curve) {
  os << "limit,count,density\n";
  for (const auto& pt : curve.points) {
    os << pt.limit << ',' << pt.count << ',' << std::setprecision(10) << pt.density << '\n';
  }
}

void write_complexity_csv(std::ostream& os, const ComplexityReport& report) {
  os << "length,distinct,max_gap\n";
  for (const auto& r : report.rows) os << r.length << ',' << r.distinct << ',' << r.max_gap << '\n';
}

void write_mean_csv(std::ostream& os, const std::vector<MeanReport>& trace) {
  os << "N,real,imag,abs_error\n";
  for (const auto& r : trace) {
    os << r.count << ',' << format_hp(r.empirical.re) << ',' << format_hp(r.empirical.im) << ','
       << format_hp(r.discrepancy) << '\n';
  }
}

}  // namespace autoseq
