// One PASS/FAIL line per acceptance criterion. Exit status 0 iff every
// selected criterion passes (wall-clock budgets included).
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "autoseq/analysis.hpp"
#include "autoseq/arithmetic.hpp"
#include "autoseq/automata_ops.hpp"
#include "autoseq/character.hpp"
#include "autoseq/classifier.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/error.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/multiplicativity.hpp"
#include "autoseq/pumping.hpp"
#include "autoseq/scan.hpp"

using namespace autoseq;

namespace {

// pinned parameters
constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 100;
constexpr std::uint64_t kRoundTripRange = 100000;
constexpr std::uint64_t kMeanTerms = 1000000;
const HpReal kMeanTolerance("0.01");
constexpr std::uint64_t kCrtBound = 900;
constexpr std::size_t kPumpSamples = 50;
constexpr unsigned kPumpMaxK = 8;
constexpr std::size_t kRemoveDfaos = 20;
constexpr std::uint64_t kDenseRange = 10000;
constexpr std::uint64_t kModulusBound = 30030;  // 2*3*5*7*11*13
constexpr std::uint64_t kClassifyHorizon = 4096;
constexpr std::uint64_t kToeplitzN = 500;
constexpr std::uint64_t kToeplitzS = 200;
constexpr std::size_t kFactorLength = 8;
constexpr std::uint64_t kFactorRange = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<TheoremFormSpec>& corpus() {
  static const auto c = spec_corpus(kCorpusSeed, kCorpusSize);
  return c;
}

bool is_dense(const TheoremFormSpec& s) { return std::holds_alternative<PeriodicMult>(s.f2); }

Value pd(std::uint64_t n) {
  if (n == 0) return Value::zero();
  return nu(2, n) % 2 == 0 ? Value::one() : Value::from_int(-1);
}

Value even_powers_of_two(std::uint64_t n) {
  return n != 0 && (n & (n - 1)) == 0 && nu(2, n) % 2 == 0 ? Value::one() : Value::zero();
}

// the spec evaluated on arbitrary-size integers straight from the factor data
Value spec_at(const TheoremFormSpec& s, BigInt n) {
  if (n == 0) return Value::zero();
  std::uint64_t k = 0;
  while (n % s.p == 0) {
    n /= s.p;
    ++k;
  }
  Value v = s.f1(k);
  if (v.is_zero()) return v;
  if (const auto* pm = std::get_if<PeriodicMult>(&s.f2)) {
    return v * pm->values()[static_cast<std::uint64_t>(n % pm->period())];
  }
  const auto& table = std::get<FiniteSupport>(s.f2).prime_powers();
  std::set<std::uint64_t> primes;
  for (const auto& [q, _] : table) primes.insert(prime_divisors(q).front());
  for (std::uint64_t q : primes) {
    BigInt qe = 1;
    while (n % q == 0) {
      n /= q;
      qe *= q;
    }
    if (qe == 1) continue;
    auto it = qe > BigInt(std::numeric_limits<std::uint64_t>::max()) ? table.end()
                                                                      : table.find(static_cast<std::uint64_t>(qe));
    if (it == table.end()) return Value::zero();
    v *= it->second;
  }
  return n == 1 ? v : Value::zero();
}

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

Outcome round_trip() {
  std::size_t unique = 0, exact = 0, recovered = 0;
  std::ostringstream bad;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& s = corpus()[i];
    const auto a = theorem_form(s);
    try {
      const auto d = decompose(a, s.p, kRoundTripRange);
      const auto back = theorem_form(d.spec());
      bool same = true;
      for (std::uint64_t n = 1; n <= kRoundTripRange && same; ++n) same = back(n) == a(n);
      if (same) ++exact;
      if (d.unique) {
        ++unique;
        if (d.spec() == s) ++recovered;
        else bad << " spec#" << i << " differs";
      }
      if (!same) bad << " spec#" << i << " reconstruction";
    } catch (const Error& e) {
      bad << " spec#" << i << " " << to_string(e.kind());
    }
  }
  Outcome o;
  o.pass = exact == corpus().size() && recovered == unique;
  o.detail = "exact on [1,1e5] " + ratio(exact, corpus().size()) + ", recovered " + ratio(recovered, unique) +
             " non-eventually-periodic" + bad.str();
  return o;
}

Outcome period_doubling() {
  const auto kt = kernel_closure(pd, 2, 2048);
  const Dfao m = minimize(dfao_from_kernel(kt));
  const auto bad = first_failure(0, 1000000, [&](std::uint64_t n) { return m.eval(n) == pd(n); });
  const bool mult = std::holds_alternative<Certified>(is_multiplicative(pd, 4096));
  const bool cmult = std::holds_alternative<Certified>(is_completely_multiplicative(pd, 4096));
  Outcome o;
  o.pass = kt.size() <= 3 && !bad && mult && cmult;
  o.detail = "kernel classes " + std::to_string(kt.size()) + " (limit 3), minimal states " + std::to_string(m.size()) +
             ", eval-equal to 1e6 " + (bad ? "no (n=" + std::to_string(*bad) + ")" : "yes") +
             ", multiplicative " + (mult ? "yes" : "no") + ", completely " + (cmult ? "yes" : "no");
  return o;
}

Outcome means() {
  std::size_t ok = 0, total = 0;
  HpReal worst = 0;
  for (const auto& s : corpus()) {
    if (!is_dense(s)) continue;
    ++total;
    const auto r = mean_report(s, kMeanTerms);
    if (r.discrepancy <= kMeanTolerance) ++ok;
    if (r.discrepancy > worst) worst = r.discrepancy;
  }
  const auto one = Value::one(), minus = Value::from_int(-1);
  const PeriodicMult odd(2, {Value::zero(), one});
  const bool third = mean_formula_exact({2, EventuallyPeriodicSeq({}, {one, minus}), odd}) == Cyclotomic(Rational(1, 3));
  const bool zero = mean_formula_exact({2, EventuallyPeriodicSeq({one}, {minus}), odd}) == Cyclotomic(Rational(0));
  Outcome o;
  o.pass = ok == total && third && zero;
  o.detail = "within 1e-2 at N=1e6 " + ratio(ok, total) + " (worst " + format_hp(worst, 8) + "), M=1/3 " +
             (third ? "exact" : "wrong") + ", M=0 " + (zero ? "exact" : "wrong");
  return o;
}

Outcome characters() {
  std::size_t splits = 0, failed = 0;
  for (std::uint64_t k = 1; k <= kCrtBound; ++k) {
    const auto chars = characters_mod(k);
    for (std::uint64_t k1 : divisors(k)) {
      const std::uint64_t k2 = k / k1;
      if (std::gcd(k1, k2) != 1) continue;
      for (const auto& chi : chars) {
        ++splits;
        const auto [c1, c2] = crt_split(chi, k1, k2);
        const auto ord = static_cast<std::int64_t>(chi.order());
        const auto s1 = ord / static_cast<std::int64_t>(c1.order());
        const auto s2 = ord / static_cast<std::int64_t>(c2.order());
        const auto& t = chi.exponents();
        const auto& t1 = c1.exponents();
        const auto& t2 = c2.exponents();
        bool good = c1.modulus() == k1 && c2.modulus() == k2;
        for (std::uint64_t n = 0, r1 = 0, r2 = 0; n < k && good; ++n) {
          const std::int64_t e = t[n], e1 = t1[r1], e2 = t2[r2];
          if (++r1 == k1) r1 = 0;
          if (++r2 == k2) r2 = 0;
          if (e < 0 || e1 < 0 || e2 < 0) {
            good = e < 0 && (e1 < 0 || e2 < 0);
            continue;
          }
          std::int64_t sum = e1 * s1 + e2 * s2;
          while (sum >= ord) sum -= ord;
          good = sum == e;
        }
        if (!good) ++failed;
      }
    }
  }
  std::size_t local = 0, local_failed = 0;
  for (std::uint64_t m : {12, 40, 45, 72}) {
    for (const auto& chi : characters_mod(m)) {
      const DenseData dd(m, 1, chi);
      for (std::uint64_t p : dd.primes()) {
        ++local;
        const std::uint64_t pa = ipow(p, nu(p, m));
        std::uint64_t bar = 0;
        while (!(bar % pa == 1 % pa && bar % (m / pa) == p % (m / pa))) ++bar;
        if (dd.pbar(p) != bar || dd.complement(p)(p) != chi(bar)) ++local_failed;
      }
    }
  }
  Outcome o;
  o.pass = failed == 0 && local_failed == 0;
  o.detail = "crt_split " + ratio(splits - failed, splits) + " for k1*k2 <= 900, local identity " +
             ratio(local - local_failed, local);
  return o;
}

Outcome pumping() {
  Rng rng(kCorpusSeed + 5);
  std::size_t checks = 0, failed = 0;
  for (const auto& s : corpus()) {
    const Dfao d = dfao_for_spec(s);
    const unsigned base = d.base();
    for (std::size_t i = 0; i < kPumpSamples; ++i) {
      // at least |Q| + 1 digits
      const std::size_t len = d.size() + 1 + rng() % 8;
      BigInt n = 1 + rng() % (base - 1);
      for (std::size_t j = 1; j < len; ++j) n = n * base + rng() % base;
      const Value fn = spec_at(s, n);
      if (eval_big(d, n) != fn) ++failed;
      const auto w = pump_witness(d, n);
      for (unsigned k = 0; k <= kPumpMaxK; ++k) {
        ++checks;
        const BigInt idx = pumped_index(w, base, k);
        if (eval_big(d, idx) != fn || spec_at(s, idx) != fn) ++failed;
      }
    }
  }
  Outcome o;
  o.pass = failed == 0;
  o.detail = "pumped values equal f(n) " + ratio(checks - failed, checks) + " over " + std::to_string(corpus().size()) +
             " automata";
  return o;
}

Outcome removal() {
  Rng rng(kCorpusSeed + 6);
  std::size_t pointwise = 0, growth = 0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < kRemoveDfaos; ++i) {
    const Dfao d = random_dfao(rng, 2, 3 + rng() % 6);
    const Dfao r = remove_p_powers(d);
    const auto bad = first_failure(1, kRoundTripRange, [&](std::uint64_t n) { return r.eval(n) == d.eval(n >> std::countr_zero(n)); });
    if (!bad) ++pointwise;
    const std::size_t before = kernel_closure(as_oracle(d), 2).size();
    const std::size_t after = kernel_closure(as_oracle(r), 2).size();
    if (after <= before + 1) ++growth;
    if (after > before) worst = std::max(worst, after - before);
  }
  Outcome o;
  o.pass = pointwise == kRemoveDfaos && growth == kRemoveDfaos;
  o.detail = "pointwise on [1,1e5] " + ratio(pointwise, kRemoveDfaos) + ", kernel growth <= 1 " +
             ratio(growth, kRemoveDfaos) + " (max growth " + std::to_string(worst) + ")";
  return o;
}

Outcome dense_identities() {
  std::size_t instances = 0, product_ok = 0, factors = 0, factor_ok = 0, h_factors = 0, h_ok = 0;
  std::ostringstream fails;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& s = corpus()[i];
    if (!is_dense(s)) continue;
    ++instances;
    const auto a = theorem_form(s);
    const auto c = classify_sparse_dense(a, kModulusBound, kClassifyHorizon, s.p);
    if (!c.dense) continue;
    if (std::holds_alternative<Pass>(dense_product_form_check(a, *c.dense, kDenseRange))) ++product_ok;
    for (std::uint64_t q : c.dense->primes()) {
      ++factors;
      const auto v = periodic_factor_check(a, *c.dense, q, kDenseRange);
      const bool in_h = c.dense->h() % q == 0;
      h_factors += in_h;
      if (std::holds_alternative<FactorPeriod>(v)) {
        ++factor_ok;
        h_ok += in_h;
      } else if (fails.tellp() < 200) {
        fails << " spec#" << i << "/q=" << q << (in_h ? "|h" : "|lambda");
      }
    }
  }
  Outcome o;
  o.pass = product_ok == instances && factor_ok == factors;
  o.detail = "product form " + ratio(product_ok, instances) + ", factor periods " + ratio(factor_ok, factors) +
             " (q | h: " + ratio(h_ok, h_factors) + ")" +
             (fails.tellp() > 0 ? ", aperiodic:" + fails.str() : "");
  return o;
}

Outcome dichotomy() {
  std::size_t agree = 0, sparse = 0, factored = 0;
  for (const auto& s : corpus()) {
    const auto a = theorem_form(s);
    const auto c = classify_sparse_dense(a, kModulusBound, kClassifyHorizon, s.p);
    if ((c.verdict == Verdict::Dense) == is_dense(s)) ++agree;
    if (c.verdict != Verdict::Sparse) continue;
    ++sparse;
    const auto report = sparse_support_analysis(a, kClassifyHorizon, c.modulus);
    bool good = report.flagged.empty() && report.support == c.support;
    for (std::uint64_t n : c.support) good = good && c.modulus % radical(n) == 0;
    if (good) ++factored;
  }
  Outcome o;
  o.pass = agree == corpus().size() && factored == sparse;
  o.detail = "verdict agrees " + ratio(agree, corpus().size()) + ", sparse supports factor over the modulus " +
             ratio(factored, sparse);
  return o;
}

Outcome negative_controls() {
  auto squares = [](std::uint64_t n) {
    const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    for (std::uint64_t t = r > 0 ? r - 1 : 0; t <= r + 1; ++t) {
      if (t * t == n) return Value::one();
    }
    return Value::zero();
  };
  bool budget = false;
  try {
    kernel_closure(squares, 2, 4096, 512);
  } catch (const Error& e) {
    budget = e.kind() == ErrorKind::BudgetExceeded;
  }
  std::size_t tables = 0, witnessed = 0;
  for (const auto& s : corpus()) {
    const auto* pm = std::get_if<PeriodicMult>(&s.f2);
    if (pm == nullptr || pm->period() < 3) continue;
    ++tables;
    auto values = pm->values();
    const std::uint64_t d = pm->period();
    values[d - 1] = values[d - 1] * Value::from_int(2);
    auto f = [&](std::uint64_t n) { return values[n % d]; };
    const auto v = is_multiplicative(f, std::max<std::uint64_t>(4096, 2 * d * d));
    if (const auto* c = std::get_if<Counterexample>(&v)) {
      const bool ok = c->m == 1 && c->n == 1 ? !f(1).is_one()
                                             : std::gcd(c->m, c->n) == 1 && f(c->m * c->n) != f(c->m) * f(c->n);
      if (ok) ++witnessed;
    }
  }
  Outcome o;
  o.pass = budget && tables > 0 && witnessed == tables;
  o.detail = std::string("squares budget exceeded ") + (budget ? "yes" : "no") + ", corrupted tables with verified witness " +
             ratio(witnessed, tables);
  return o;
}

Outcome almost_periodicity() {
  std::size_t dense = 0, toeplitz_ok = 0, gaps_ok = 0;
  for (const auto& s : corpus()) {
    if (!is_dense(s)) continue;
    ++dense;
    const auto a = theorem_form(s);
    if (std::holds_alternative<Pass>(toeplitz_check(a, s.p, f2_period_factor(s.f2), kToeplitzN, kToeplitzS))) ++toeplitz_ok;
    if (word_complexity(a, kFactorLength, kFactorRange).bounded_gaps) ++gaps_ok;
  }
  const bool sparse_fails = std::holds_alternative<Fail>(toeplitz_check(even_powers_of_two, 2, 1, kToeplitzN, kToeplitzS));
  const bool sparse_gaps = word_complexity(even_powers_of_two, kFactorLength, kFactorRange).bounded_gaps;
  Outcome o;
  o.pass = toeplitz_ok == dense && gaps_ok == dense && sparse_fails && !sparse_gaps;
  o.detail = "dense toeplitz " + ratio(toeplitz_ok, dense) + ", dense bounded gaps " + ratio(gaps_ok, dense) +
             ", sparse toeplitz " + (sparse_fails ? "fails" : "passes") + ", sparse gaps " +
             (sparse_gaps ? "bounded" : "unbounded");
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"product-form round trip", 60, round_trip},
      {"period-doubling variant", 10, period_doubling},
      {"mean formula", 30, means},
      {"character algebra", 10, characters},
      {"pumping", 5, pumping},
      {"remove_p_powers", 10, removal},
      {"dense identities", 30, dense_identities},
      {"sparse/dense dichotomy", 20, dichotomy},
      {"negative controls", 10, negative_controls},
      {"toeplitz / almost periodicity", 20, almost_periodicity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<unsigned> selected;
  app.add_option("--criterion", selected, "criteria to run (default all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (unsigned i = 1; i <= criteria().size(); ++i) selected.push_back(i);
  }
  bool all_pass = true;
  for (unsigned i : selected) {
    const auto& c = criteria()[i - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs <= c.budget_seconds;
    all_pass = all_pass && pass;
    std::cout << "criterion " << std::setw(2) << i << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << std::fixed << std::setprecision(2) << secs << "s / " << std::setprecision(0) << c.budget_seconds
              << "s]  " << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
