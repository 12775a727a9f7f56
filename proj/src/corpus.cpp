#include "autoseq/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "autoseq/character.hpp"

namespace autoseq {

namespace {

std::uint64_t pick(Rng& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

const std::vector<Value>& value_pool() {
  static const std::vector<Value> pool{
      Value::zero(),
      Value::one(),
      Value::from_int(-1),
      Value::root_of_unity(Rational(1, 4)),
      Value::root_of_unity(Rational(3, 4)),
      Value::from_int(2),
      Value::unit(Rational(1, 2), Rational(0)),
      Value::root_of_unity(Rational(1, 3)),
  };
  return pool;
}

TheoremFormSpec random_spec(Rng& rng) {
  static const std::uint64_t kPrimes[] = {2, 3, 5};
  static const std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13};
  const auto& pool = value_pool();
  TheoremFormSpec spec;
  spec.p = kPrimes[pick(rng, 3)];

  std::vector<Value> pre(pick(rng, 4));
  std::vector<Value> per(1 + pick(rng, 4));
  for (auto& v : pre) v = pool[pick(rng, pool.size())];
  for (auto& v : per) v = pool[pick(rng, pool.size())];
  (pre.empty() ? per.front() : pre.front()) = Value::one();
  spec.f1 = EventuallyPeriodicSeq(std::move(pre), std::move(per));

  if (pick(rng, 2) == 0) {
    const std::uint64_t d = 1 + pick(rng, 12);
    const auto chars = characters_mod(d);
    spec.f2 = PeriodicMult::from_character(chars[pick(rng, chars.size())], spec.p);
  } else {
    std::map<std::uint64_t, Value> table;
    const std::uint64_t want = pick(rng, 5);
    std::uint64_t product = 1;
    for (std::uint64_t tries = 0; table.size() < want && tries < 32; ++tries) {
      const std::uint64_t q = kSmallPrimes[pick(rng, 6)];
      if (q == spec.p) continue;
      std::vector<std::uint64_t> powers;
      for (std::uint64_t qe = q; qe <= 50; qe *= q) powers.push_back(qe);
      const std::uint64_t qe = powers[pick(rng, powers.size())];
      if (table.count(qe) || product * qe > 50000) continue;
      product *= qe;
      table.emplace(qe, pool[1 + pick(rng, pool.size() - 1)]);
    }
    spec.f2 = FiniteSupport(std::move(table));
  }
  validate(spec);
  return spec;
}

std::vector<TheoremFormSpec> spec_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<TheoremFormSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_spec(rng));
  return out;
}

Dfao random_dfao(Rng& rng, unsigned base, std::size_t states) {
  const auto& pool = value_pool();
  std::vector<std::vector<Dfao::State>> delta(states, std::vector<Dfao::State>(base));
  for (auto& row : delta) {
    for (auto& t : row) t = pick(rng, states);
  }
  // union the zero edges so each component gets one output
  std::vector<std::size_t> parent(states);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (std::size_t s = 0; s < states; ++s) parent[root(s)] = root(delta[s][0]);
  std::vector<Value> component(states);
  for (auto& v : component) v = pool[pick(rng, pool.size())];
  std::vector<Value> out(states);
  for (std::size_t s = 0; s < states; ++s) out[s] = component[root(s)];
  return Dfao(base, 0, std::move(delta), std::move(out));
}

}  // namespace autoseq
