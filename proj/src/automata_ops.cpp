#include "autoseq/automata_ops.hpp"

#include <map>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"
#include "autoseq/kernel.hpp"

namespace autoseq {

Dfao minimize(const Dfao& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> block(n);
  {
    std::map<Value, std::size_t> ids;
    for (std::size_t s = 0; s < n; ++s) block[s] = ids.try_emplace(d.output(s), ids.size()).first->second;
  }
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (unsigned x = 0; x < d.base(); ++x) sig.push_back(block[d.next(s, x)]);
      next[s] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  std::vector<std::vector<Dfao::State>> delta(count, std::vector<Dfao::State>(d.base()));
  std::vector<Value> out(count);
  for (std::size_t s = 0; s < n; ++s) {
    out[block[s]] = d.output(s);
    for (unsigned x = 0; x < d.base(); ++x) delta[block[s]][x] = block[d.next(s, x)];
  }
  return Dfao(d.base(), block[d.initial()], std::move(delta), std::move(out));
}

Dfao map_values(const Dfao& d, const std::function<Value(const Value&)>& pi) {
  std::vector<Value> out;
  out.reserve(d.size());
  for (const auto& v : d.outputs()) out.push_back(pi(v));
  return Dfao(d.base(), d.initial(), d.delta(), std::move(out));
}

Dfao product(const Dfao& d1, const Dfao& d2) {
  if (d1.base() != d2.base()) throw Error(ErrorKind::InvalidArgument, "product of automata with different bases");
  std::map<std::pair<Dfao::State, Dfao::State>, std::size_t> ids;
  std::vector<std::pair<Dfao::State, Dfao::State>> pairs;
  auto intern = [&](Dfao::State a, Dfao::State b) {
    auto [it, fresh] = ids.try_emplace({a, b}, pairs.size());
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(d1.initial(), d2.initial());
  std::vector<std::vector<Dfao::State>> delta;
  std::vector<Value> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    std::vector<Dfao::State> row(d1.base());
    for (unsigned x = 0; x < d1.base(); ++x) row[x] = intern(d1.next(a, x), d2.next(b, x));
    delta.push_back(std::move(row));
    out.push_back(d1.output(a) * d2.output(b));
  }
  return Dfao(d1.base(), 0, std::move(delta), std::move(out));
}

namespace {

Dfao lift(const Dfao& d, unsigned k) {
  const std::uint64_t big = ipow(d.base(), k);
  if (big > (1U << 20)) throw Error(ErrorKind::InvalidArgument, "lifted alphabet too large");
  std::vector<std::vector<Dfao::State>> delta(d.size(), std::vector<Dfao::State>(big));
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (std::uint64_t x = 0; x < big; ++x) {
      Dfao::State t = s;
      std::uint64_t rest = x;
      for (unsigned j = 0; j < k; ++j) {
        t = d.next(t, static_cast<unsigned>(rest % d.base()));
        rest /= d.base();
      }
      delta[s][x] = t;
    }
  }
  return Dfao(static_cast<unsigned>(big), d.initial(), std::move(delta), d.outputs());
}

unsigned exact_root(unsigned base, unsigned k) {
  for (unsigned mu = 2; mu <= base; ++mu) {
    std::uint64_t v = 1;
    for (unsigned j = 0; j < k && v <= base; ++j) v *= mu;
    if (v == base) return mu;
    if (v > base) break;
  }
  throw Error(ErrorKind::InvalidArgument, "base " + std::to_string(base) + " is not a " + std::to_string(k) + "-th power");
}

}  // namespace

Dfao base_power(const Dfao& d, unsigned k, BaseDirection direction) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "base power exponent must be positive");
  if (k == 1) return d;
  if (direction == BaseDirection::Up) return lift(d, k);
  const unsigned mu = exact_root(d.base(), k);
  std::size_t budget = 0;
  std::uint64_t m = 1;
  for (unsigned j = 0; j < k; ++j, m *= mu) budget += d.size() * m;
  std::uint64_t verify = 1;
  for (std::size_t j = 0; j < d.size() + 2 && verify < 100000; ++j) verify *= d.base();
  return minimize(learn_dfao(as_oracle(d), mu, verify, budget));
}

Dfao restrict_progression(const Dfao& d, std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "progression step must be positive");
  const unsigned base = d.base();
  std::map<std::pair<std::uint64_t, Dfao::State>, std::size_t> ids;
  std::vector<std::pair<std::uint64_t, Dfao::State>> states;
  auto intern = [&](std::uint64_t carry, Dfao::State q) {
    auto [it, fresh] = ids.try_emplace({carry, q}, states.size());
    if (fresh) states.emplace_back(carry, q);
    return it->second;
  };
  intern(b, d.initial());
  std::vector<std::vector<Dfao::State>> delta;
  std::vector<Value> out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [carry, q] = states[i];
    std::vector<Dfao::State> row(base);
    for (unsigned x = 0; x < base; ++x) {
      const std::uint64_t t = mul_add(a, x, carry);
      row[x] = intern(t / base, d.next(q, static_cast<unsigned>(t % base)));
    }
    delta.push_back(std::move(row));
    // the pending carry is the rest of a*n + b once n runs out of digits
    out.push_back(d.output(d.run_from(q, carry)));
  }
  return Dfao(base, 0, std::move(delta), std::move(out));
}

Dfao remove_p_powers(const Dfao& d) {
  if (!is_prime(d.base())) throw Error(ErrorKind::InvalidArgument, "remove_p_powers needs a prime base");
  auto delta = d.delta();
  auto out = d.outputs();
  const Dfao::State init = d.initial();
  bool reentered = false;
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (unsigned x = 0; x < d.base(); ++x) {
      if (delta[s][x] == init && !(s == init && x == 0)) reentered = true;
    }
  }
  Dfao::State start = init;
  if (reentered) {
    start = delta.size();
    delta.push_back(delta[init]);
    out.push_back(out[init]);
  }
  delta[start][0] = start;
  return Dfao(d.base(), start, std::move(delta), std::move(out));
}

}  // namespace autoseq
