#include "autoseq/classifier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"
#include "autoseq/multiplicativity.hpp"
#include "autoseq/scan.hpp"

namespace autoseq {

namespace {

std::vector<Value> prefix(const SequenceOracle& a, std::uint64_t horizon) {
  std::vector<Value> out(horizon + 1);
  for (std::uint64_t n = 1; n <= horizon; ++n) out[n] = a(n);
  return out;
}

void require_multiplicative(const SequenceOracle& a, std::uint64_t horizon, bool complete) {
  const std::uint64_t bound = std::max<std::uint64_t>(2, std::min<std::uint64_t>(horizon, 4096));
  const auto verdict = complete ? is_completely_multiplicative(a, bound) : is_multiplicative(a, bound);
  if (const auto* c = std::get_if<Counterexample>(&verdict)) {
    throw Error(ErrorKind::NotMultiplicative, "a(" + std::to_string(c->m * c->n) + ") != a(" + std::to_string(c->m) +
                                                  ") a(" + std::to_string(c->n) + ")");
  }
}

bool eventually_periodic_on(const std::vector<Value>& cached) {
  return eventual_period_detect(std::vector<Value>(cached.begin() + 1, cached.end())).has_value();
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

Decomposition decompose(const SequenceOracle& a, std::uint64_t p, std::uint64_t horizon) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (horizon < 4) throw Error(ErrorKind::InvalidArgument, "horizon must be at least 4");
  require_multiplicative(a, horizon, false);

  std::vector<Value> f1_terms;
  for (std::uint64_t pk = 1;; pk *= p) {
    f1_terms.push_back(a(pk));
    if (pk > std::numeric_limits<std::uint64_t>::max() / p) break;
  }
  auto f1 = fit_eventually_periodic(f1_terms);
  if (!f1) {
    throw Error(ErrorKind::PeriodUndetected,
                "no eventual period in a(p^k), k < " + std::to_string(f1_terms.size()));
  }

  const SequenceOracle g = [&a, p](std::uint64_t m) { return m % p == 0 ? Value::zero() : a(m); };
  Dichotomy kind;
  try {
    kind = dichotomy_f2(g, horizon);
  } catch (const Error& e) {
    throw Error(ErrorKind::ReconstructionMismatch, std::string("f2: ") + e.what());
  }

  Decomposition out;
  out.p = p;
  out.f1 = *f1;
  try {
    if (const auto* per = std::get_if<PeriodicVerdictF2>(&kind)) {
      std::vector<Value> values(per->period);
      for (std::uint64_t r = 0; r < per->period; ++r) values[r] = g(r == 0 ? per->period : r);
      out.f2 = PeriodicMult(per->period, std::move(values));
    } else {
      const std::uint64_t bound = std::get<FinitelySupported>(kind).bound;
      std::map<std::uint64_t, Value> table;
      for (std::uint64_t q : primes_up_to(bound)) {
        if (q == p) continue;
        for (std::uint64_t qe = q; qe <= bound; qe *= q) {
          if (Value v = g(qe); !v.is_zero()) table.emplace(qe, v);
          if (qe > bound / q) break;
        }
      }
      out.f2 = FiniteSupport(std::move(table));
    }
    validate(out.spec());
  } catch (const Error& e) {
    throw Error(ErrorKind::ReconstructionMismatch, std::string("recovered data is not a valid spec: ") + e.what());
  }

  const auto rebuilt = theorem_form(out.spec());
  if (const auto bad = first_failure(1, horizon, [&](std::uint64_t n) { return rebuilt(n) == a(n); })) {
    throw Error(ErrorKind::ReconstructionMismatch, "reconstruction differs at n = " + std::to_string(*bad));
  }
  out.verified_to = horizon;
  out.unique = !eventually_periodic_on(prefix(a, horizon));
  return out;
}

std::variant<std::uint64_t, PeriodicVerdict> find_base_prime(const SequenceOracle& a, std::uint64_t lambda,
                                                             std::uint64_t horizon) {
  require_multiplicative(a, horizon, false);
  if (eventually_periodic_on(prefix(a, horizon))) return PeriodicVerdict{horizon};
  PrimePower pp;
  if (!as_prime_power(lambda, pp)) {
    throw Error(ErrorKind::CompositeNonPeriodic,
                "not eventually periodic, yet the base " + std::to_string(lambda) + " is not a prime power");
  }
  decompose(a, pp.prime, horizon);
  return pp.prime;
}

Classification classify_sparse_dense(const SequenceOracle& a, std::uint64_t bound, std::uint64_t horizon,
                                     std::uint64_t declared_base) {
  if (horizon < 2) throw Error(ErrorKind::InvalidArgument, "horizon must be at least 2");
  const auto cached = prefix(a, horizon);
  std::vector<std::uint64_t> support;
  for (std::uint64_t n = 2; n <= horizon; ++n) {
    if (!cached[n].is_zero()) support.push_back(n);
  }

  auto character_fit = [&](std::uint64_t m) -> std::optional<DirichletCharacter> {
    if (m > horizon) return std::nullopt;
    std::map<std::uint64_t, Rational> phases;
    for (std::uint64_t r = 0; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      const Value& v = cached[r == 0 ? 1 : r];
      if (!v.is_unimodular()) return std::nullopt;
      phases.emplace(r, v.phase());
    }
    std::optional<DirichletCharacter> chi;
    try {
      chi = DirichletCharacter::from_phases(m, phases);
    } catch (const Error&) {
      return std::nullopt;
    }
    const auto bad = first_failure(1, horizon, [&](std::uint64_t n) {
      return std::gcd(n, m) != 1 || cached[n] == (*chi)(n);
    });
    if (bad) return std::nullopt;
    return chi;
  };

  for (std::uint64_t m = 1; m <= bound; ++m) {
    const bool zero_fit =
        std::none_of(support.begin(), support.end(), [m](std::uint64_t s) { return std::gcd(s, m) == 1; });
    if (zero_fit) {
      Classification c;
      c.verdict = Verdict::Sparse;
      c.modulus = m;
      c.horizon = horizon;
      c.support.push_back(1);
      c.support.insert(c.support.end(), support.begin(), support.end());
      if (cached[1].is_zero()) c.support.erase(c.support.begin());
      return c;
    }
    if (auto chi = character_fit(m)) {
      std::uint64_t lam_part = 1;
      if (declared_base > 1) {
        for (const auto& pp : factor(m)) {
          if (declared_base % pp.prime == 0) lam_part *= pp.value();
        }
      }
      std::uint64_t lambda = 1;
      while (lambda % lam_part != 0) lambda = mul_add(lambda, declared_base, 0);
      const std::uint64_t h = m / lam_part;
      Classification c;
      c.verdict = Verdict::Dense;
      c.modulus = m;
      c.horizon = horizon;
      c.dense.emplace(h, lambda, induce(*chi, h * lambda));
      return c;
    }
  }
  throw Error(ErrorKind::NoFit, "no modulus up to " + std::to_string(bound) + " fits on [1, " +
                                    std::to_string(horizon) + "]");
}

CheckVerdict dense_product_form_check(const SequenceOracle& a, const DenseData& dense, std::uint64_t bound) {
  struct Local {
    std::uint64_t p;
    const DirichletCharacter* chi;
    Value chi_pbar;
    std::vector<Value> powers;  // a(p^k)
  };
  std::vector<Local> locals;
  for (std::uint64_t p : dense.primes()) {
    Local l{p, &dense.local(p), dense.chi()(dense.pbar(p)), {}};
    for (std::uint64_t pk = 1; pk <= bound; pk *= p) l.powers.push_back(a(pk));
    locals.push_back(std::move(l));
  }
  const auto bad = first_failure(1, bound, [&](std::uint64_t n) {
    Value acc = Value::one();
    for (const auto& l : locals) {
      std::uint64_t m = n;
      unsigned k = 0;
      while (m % l.p == 0) {
        m /= l.p;
        ++k;
      }
      acc *= (*l.chi)(m) * l.powers[k] / l.chi_pbar.pow(k);
    }
    return acc == a(n);
  });
  if (bad) return Fail{*bad};
  return Pass{};
}

Value periodic_factor(const SequenceOracle& a, const DenseData& dense, std::uint64_t q, std::uint64_t n) {
  const Value cq = dense.chi()(dense.pbar(q));
  std::uint64_t m = n;
  std::uint64_t qk = 1;
  unsigned k = 0;
  while (m % q == 0) {
    m /= q;
    qk *= q;
    ++k;
  }
  return dense.local(q)(m) * a(qk) / cq.pow(k);
}

FactorVerdict periodic_factor_check(const SequenceOracle& a, const DenseData& dense, std::uint64_t q,
                                    std::uint64_t bound) {
  const unsigned alpha = dense.alpha(q);
  const Value cq = dense.chi()(dense.pbar(q));
  std::vector<Value> b;
  for (std::uint64_t qk = 1;; qk *= q) {
    b.push_back(a(qk) / cq.pow(static_cast<std::int64_t>(b.size())));
    if (qk > std::numeric_limits<std::uint64_t>::max() / q) break;
  }
  std::optional<unsigned> gamma;
  for (std::size_t k = 0; k + 2 < b.size(); ++k) {
    if (b[k] == b[k + 1] && b[k + 1] == b[k + 2]) {
      gamma = static_cast<unsigned>(k);
      break;
    }
  }
  std::uint64_t limit = std::max<std::uint64_t>(1, bound / 3);
  if (gamma) {
    std::uint64_t qa = 1;
    for (unsigned i = 0; i < *gamma + alpha && qa <= limit; ++i) qa *= q;
    limit = std::min(limit, qa);
  }
  std::vector<Value> g(bound + 1);
  for (std::uint64_t n = 1; n <= bound; ++n) g[n] = periodic_factor(a, dense, q, n);
  std::uint64_t witness = 0;
  for (std::uint64_t d = 1; d <= limit; ++d) {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n + d <= bound; ++n) {
      if (g[n + d] != g[n]) {
        bad = n;
        break;
      }
    }
    if (bad == 0) return FactorPeriod{d, gamma, limit};
    witness = bad;
  }
  return FactorFail{witness, gamma, limit};
}

std::variant<CompletelyMultiplicativeForm, PowerSupported> completely_multiplicative_form(
    const SequenceOracle& a, std::uint64_t horizon, std::uint64_t modulus_bound) {
  require_multiplicative(a, horizon, true);
  const Classification cls = classify_sparse_dense(a, modulus_bound, horizon);
  if (cls.verdict == Verdict::Sparse) {
    std::uint64_t p = 0;
    for (std::uint64_t s : cls.support) {
      if (s == 1) continue;
      const auto primes = prime_divisors(s);
      if (primes.size() != 1 || (p != 0 && primes.front() != p)) {
        throw Error(ErrorKind::FormMismatch, "support element " + std::to_string(s) + " is not a power of one prime");
      }
      p = primes.front();
    }
    return PowerSupported{p == 0 ? 2 : p};
  }
  const std::uint64_t m = cls.modulus;
  const DirichletCharacter& chi = cls.dense->chi();
  std::vector<std::uint64_t> active;
  for (std::uint64_t q : prime_divisors(m)) {
    if (!a(q).is_zero()) active.push_back(q);
  }
  if (active.size() > 1) {
    throw Error(ErrorKind::FormMismatch, "a is non-zero at two primes of the modulus: " + std::to_string(active[0]) +
                                             ", " + std::to_string(active[1]));
  }
  CompletelyMultiplicativeForm form;
  form.p = !active.empty() ? active.front() : (m > 1 ? prime_divisors(m).front() : 2);
  form.eps = a(form.p);
  form.chi = chi;
  const auto mismatch = first_failure(1, horizon, [&](std::uint64_t n) {
    std::uint64_t rest = n;
    unsigned k = 0;
    while (rest % form.p == 0) {
      rest /= form.p;
      ++k;
    }
    return a(n) == form.eps.pow(k) * form.chi(rest);
  });
  if (mismatch) throw Error(ErrorKind::FormMismatch, "normal form differs at n = " + std::to_string(*mismatch));
  return form;
}

SparseReport sparse_support_analysis(const SequenceOracle& a, std::uint64_t bound, std::uint64_t modulus) {
  SparseReport r;
  std::set<std::uint64_t> primes;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (a(n).is_zero()) continue;
    r.support.push_back(n);
    if (n == 1) continue;
    for (std::uint64_t q : prime_divisors(n)) {
      primes.insert(q);
      if (modulus != 0 && modulus % q != 0 && (r.flagged.empty() || r.flagged.back() != n)) r.flagged.push_back(n);
    }
  }
  for (std::uint64_t q : primes) {
    unsigned top = 0;
    auto& exps = r.exponents[q];
    std::uint64_t qe = 1;
    for (unsigned e = 1; qe <= bound / q; ++e) {
      qe *= q;
      top = e;
      if (!a(qe).is_zero()) exps.push_back(e);
    }
    if (!exps.empty() && 4 * static_cast<std::uint64_t>(exps.back()) > 3 * static_cast<std::uint64_t>(top)) {
      r.p_estimate.insert(q);
    }
  }
  return r;
}

}  // namespace autoseq
