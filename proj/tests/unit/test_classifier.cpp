#include <doctest.h>

#include "autoseq/arithmetic.hpp"
#include "autoseq/character.hpp"
#include "autoseq/classifier.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/error.hpp"
#include "autoseq/multiplicativity.hpp"

using namespace autoseq;

namespace {

const Value kMinus = Value::from_int(-1);

Value pd(std::uint64_t n) {
  if (n == 0) return Value::zero();
  return nu(2, n) % 2 == 0 ? Value::one() : kMinus;
}

Value even_powers_of_two(std::uint64_t n) {
  return n != 0 && (n & (n - 1)) == 0 && nu(2, n) % 2 == 0 ? Value::one() : Value::zero();
}

DirichletCharacter chi4() { return DirichletCharacter(4, 2, {-1, 0, -1, 1}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("decompose period-doubling") {
  const auto d = decompose(pd, 2, 4096);
  CHECK(d.p == 2);
  CHECK(d.f1 == EventuallyPeriodicSeq({}, {Value::one(), kMinus}));
  CHECK(std::get<PeriodicMult>(d.f2) == PeriodicMult(2, {Value::zero(), Value::one()}));
  CHECK(d.unique);
  CHECK(d.verified_to == 4096);
}

TEST_CASE("decompose eventually periodic and sparse inputs") {
  const auto c = decompose([](std::uint64_t n) { return n ? Value::one() : Value::zero(); }, 3, 2000);
  CHECK_FALSE(c.unique);
  CHECK(c.f1 == EventuallyPeriodicSeq::constant(Value::one()));
  CHECK(std::get<PeriodicMult>(c.f2) == PeriodicMult(3, {Value::zero(), Value::one(), Value::one()}));

  const auto s = decompose(even_powers_of_two, 2, 1 << 16);
  CHECK(s.unique);
  CHECK(s.f1 == EventuallyPeriodicSeq({}, {Value::one(), Value::zero()}));
  CHECK(std::get<FiniteSupport>(s.f2) == FiniteSupport{});
}

TEST_CASE("decompose errors") {
  auto mod3 = [](std::uint64_t n) { return Value::from_int(static_cast<std::int64_t>(n % 3)); };
  CHECK(kind_of([&] { decompose(mod3, 2, 1000); }) == ErrorKind::NotMultiplicative);
  // multiplicative, but built on the prime 3
  auto three = [](std::uint64_t n) { return n == 0 ? Value::zero() : nu(3, n) % 2 ? kMinus : Value::one(); };
  CHECK(kind_of([&] { decompose(three, 2, 1000); }) == ErrorKind::ReconstructionMismatch);
}

TEST_CASE("corpus round trip") {
  for (const auto& s : spec_corpus(17, 40)) {
    const auto a = theorem_form(s);
    const auto d = decompose(a, s.p, 1 << 14);
    for (std::uint64_t n = 1; n <= 1 << 14; ++n) REQUIRE(theorem_form(d.spec())(n) == a(n));
    if (d.unique) CHECK(d.spec() == s);
  }
}

TEST_CASE("base prime") {
  CHECK(std::get<std::uint64_t>(find_base_prime(pd, 4, 4096)) == 2);
  const auto chi6 = characters_mod(6)[1];
  const auto v = find_base_prime([&](std::uint64_t n) { return chi6(n); }, 6, 4096);
  CHECK(std::get<PeriodicVerdict>(v) == PeriodicVerdict{4096});
  CHECK(kind_of([] { find_base_prime(pd, 6, 4096); }) == ErrorKind::CompositeNonPeriodic);
  auto mod3 = [](std::uint64_t n) { return Value::from_int(static_cast<std::int64_t>(n % 3)); };
  CHECK(kind_of([&] { find_base_prime(mod3, 4, 4096); }) == ErrorKind::NotMultiplicative);
}

TEST_CASE("sparse and dense classification") {
  const auto dense = classify_sparse_dense(pd, 256, 4096, 2);
  CHECK(dense.verdict == Verdict::Dense);
  CHECK(dense.modulus == 2);
  REQUIRE(dense.dense.has_value());
  CHECK(dense.dense->lambda() == 2);
  CHECK(dense.dense->h() == 1);
  CHECK(dense.dense->chi().is_principal());

  const auto sparse = classify_sparse_dense(even_powers_of_two, 256, 4096, 2);
  CHECK(sparse.verdict == Verdict::Sparse);
  CHECK(sparse.modulus == 2);
  CHECK(sparse.support == std::vector<std::uint64_t>{1, 4, 16, 64, 256, 1024, 4096});

  const auto c4 = chi4();
  const auto m4 = classify_sparse_dense([&](std::uint64_t n) { return c4(n); }, 256, 4096);
  CHECK(m4.verdict == Verdict::Dense);
  CHECK(m4.modulus == 4);
  CHECK(m4.dense->chi() == c4);

  // a character mod 15 with declared base 3: lambda = 3, h = 5
  const auto chi15 = characters_mod(15)[5];
  const auto m15 = classify_sparse_dense([&](std::uint64_t n) { return chi15(n); }, 256, 4096, 3);
  CHECK(m15.modulus == 15);
  CHECK(m15.dense->lambda() == 3);
  CHECK(m15.dense->h() == 5);

  CHECK(kind_of([] { classify_sparse_dense(pd, 1, 4096); }) == ErrorKind::NoFit);
}

TEST_CASE("classification follows the coprime factor") {
  for (const auto& s : spec_corpus(23, 30)) {
    const auto c = classify_sparse_dense(theorem_form(s), 30030, 4096, s.p);
    const auto* pm = std::get_if<PeriodicMult>(&s.f2);
    const bool dense = pm != nullptr;
    CHECK((c.verdict == Verdict::Dense) == dense);
  }
}

TEST_CASE("dense product form") {
  const auto chi3 = characters_mod(3)[1];
  const TheoremFormSpec s{2, EventuallyPeriodicSeq({Value::one()}, {kMinus, Value::from_int(2)}),
                          PeriodicMult::from_character(chi3, 2)};
  const auto a = theorem_form(s);
  const DenseData dd(3, 4, induce(chi3, 12));
  CHECK(std::holds_alternative<Pass>(dense_product_form_check(a, dd, 10000)));
  auto corrupted = [&](std::uint64_t n) { return n == 77 ? Value::from_int(5) : a(n); };
  CHECK(std::get<Fail>(dense_product_form_check(corrupted, dd, 10000)) == Fail{77});

  const auto c4 = chi4();
  const DenseData single(1, 4, c4);
  CHECK(std::holds_alternative<Pass>(dense_product_form_check([&](std::uint64_t n) { return c4(n); }, single, 10000)));
}

TEST_CASE("periodic factor") {
  const auto c4 = chi4();
  const DenseData single(1, 4, c4);
  const auto ok = periodic_factor_check([&](std::uint64_t n) { return c4(n); }, single, 2, 10000);
  const auto& fp = std::get<FactorPeriod>(ok);
  CHECK(fp.period == 4);
  CHECK(fp.gamma == 1u);
  CHECK(kind_of([&] { periodic_factor_check(pd, single, 3, 100); }) == ErrorKind::NotADivisor);
  // the factor sequence of (-1)^nu_2 is (-1)^nu_2 itself and has no period
  const DenseData two(1, 2, DirichletCharacter::principal(2));
  CHECK(std::holds_alternative<FactorFail>(periodic_factor_check(pd, two, 2, 10000)));
  for (std::uint64_t n = 1; n < 100; ++n) CHECK(periodic_factor(pd, two, 2, n) == pd(n));
}

TEST_CASE("completely multiplicative normal form") {
  const auto f = std::get<CompletelyMultiplicativeForm>(completely_multiplicative_form(pd, 4096));
  CHECK(f.p == 2);
  CHECK(f.eps == kMinus);
  for (std::uint64_t n = 1; n < 100; n += 2) CHECK(f.chi(n).is_one());
  auto pow3 = [](std::uint64_t n) { return n != 0 && strip_prime(3, n) == 1 ? Value::one() : Value::zero(); };
  CHECK(std::get<PowerSupported>(completely_multiplicative_form(pow3, 4096)) == PowerSupported{3});
  const auto c4 = chi4();
  const auto g = completely_multiplicative_form([&](std::uint64_t n) { return c4(n); }, 4096);
  const auto& gf = std::get<CompletelyMultiplicativeForm>(g);
  CHECK(gf.eps.is_zero());
  for (std::uint64_t n = 1; n < 100; n += 2) CHECK(gf.chi(n) == c4(n));
  auto mod3 = [](std::uint64_t n) { return Value::from_int(static_cast<std::int64_t>(n % 3)); };
  CHECK(kind_of([&] { completely_multiplicative_form(mod3, 4096); }) == ErrorKind::NotMultiplicative);
}

TEST_CASE("sparse support analysis") {
  const auto r = sparse_support_analysis(even_powers_of_two, 1000000, 2);
  CHECK(r.support.size() == 10);
  CHECK(r.flagged.empty());
  CHECK(r.p_estimate == std::set<std::uint64_t>{2});

  const FiniteSupport fs({{3, Value::from_int(2)}, {5, kMinus}});
  const auto fin = sparse_support_analysis([&](std::uint64_t n) { return fs(n); }, 100000);
  CHECK(fin.support == std::vector<std::uint64_t>{1, 3, 5, 15});
  CHECK(fin.p_estimate.empty());

  const auto a = theorem_form({2, EventuallyPeriodicSeq::constant(Value::one()), FiniteSupport({{3, Value::from_int(2)}})});
  const auto two = sparse_support_analysis(a, 100000, 2);
  for (auto n : two.support) CHECK(strip_prime(2, strip_prime(3, n)) == 1);
  CHECK(two.p_estimate == std::set<std::uint64_t>{2});
  CHECK(two.flagged.size() == two.support.size() / 2);
}
