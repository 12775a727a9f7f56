#include "autoseq/kernel.hpp"

#include <map>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"
#include "autoseq/scan.hpp"

namespace autoseq {

KernelTable kernel_closure(const SequenceOracle& f, unsigned base, std::uint64_t horizon, std::size_t max_states) {
  if (base < 2) throw Error(ErrorKind::InvalidArgument, "kernel base must be at least 2");
  if (horizon < 1) throw Error(ErrorKind::InvalidArgument, "kernel horizon must be positive");
  KernelTable kt;
  kt.base = base;
  kt.horizon = horizon;
  kt.max_states = max_states;

  std::map<std::vector<Value>, std::size_t> seen;
  std::vector<std::uint64_t> scale;  // lambda^k per class
  auto intern = [&](unsigned k, std::uint64_t r, std::uint64_t lk) -> std::size_t {
    std::vector<Value> prefix(horizon);
    for (std::uint64_t n = 0; n < horizon; ++n) prefix[n] = f(mul_add(n, lk, r));
    auto [it, fresh] = seen.try_emplace(std::move(prefix), kt.representatives.size());
    if (fresh) {
      if (kt.representatives.size() >= max_states) {
        throw Error(ErrorKind::BudgetExceeded,
                    "kernel exceeds " + std::to_string(max_states) + " classes at horizon " + std::to_string(horizon));
      }
      kt.representatives.push_back({k, r});
      kt.outputs.push_back(f(r));
      kt.edges.emplace_back(base, 0);
      scale.push_back(lk);
    }
    return it->second;
  };

  intern(0, 0, 1);
  for (std::size_t c = 0; c < kt.representatives.size(); ++c) {
    const auto rep = kt.representatives[c];
    const std::uint64_t lk = scale[c];
    const std::uint64_t next_scale = mul_add(lk, base, 0);
    for (unsigned d = 0; d < base; ++d) {
      kt.edges[c][d] = intern(rep.k + 1, mul_add(d, lk, rep.r), next_scale);
    }
  }
  return kt;
}

Dfao dfao_from_kernel(const KernelTable& kt) {
  return Dfao(kt.base, 0, kt.edges, kt.outputs);
}

Dfao learn_dfao(const SequenceOracle& f, unsigned base, std::uint64_t verify_to, std::size_t max_states,
                std::uint64_t horizon, std::uint64_t horizon_cap) {
  for (;;) {
    try {
      Dfao d = dfao_from_kernel(kernel_closure(f, base, horizon, max_states));
      const auto bad = first_failure(0, verify_to, [&](std::uint64_t n) { return d.eval(n) == f(n); });
      if (!bad) return d;
      if (horizon >= horizon_cap) {
        throw Error(ErrorKind::BudgetExceeded, "kernel automaton disagrees with the sequence at n = " +
                                                   std::to_string(*bad) + " up to horizon " + std::to_string(horizon));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroInstability || horizon >= horizon_cap) throw;
    }
    horizon *= 2;
  }
}

}  // namespace autoseq
