#pragma once

#include <cstdint>
#include <vector>

#include "autoseq/dfao.hpp"

namespace autoseq {

inline constexpr std::uint64_t kDefaultHorizon = 2048;
inline constexpr std::size_t kDefaultMaxStates = 512;

/// Truncated lambda-kernel of a sequence. Class c stands for the subsequence
/// n -> f(n * lambda^k + r) of its representative (k, r).
struct KernelTable {
  struct Representative {
    unsigned k = 0;
    std::uint64_t r = 0;
  };

  unsigned base = 2;
  std::uint64_t horizon = kDefaultHorizon;
  std::size_t max_states = kDefaultMaxStates;
  std::vector<Representative> representatives;
  std::vector<std::vector<std::size_t>> edges;  // class x digit -> class
  std::vector<Value> outputs;                   // f(r)

  std::size_t size() const noexcept { return representatives.size(); }
};

/// Breadth-first closure from (0, 0). Two subsequences are identified when
/// they agree on 0 <= n < horizon. Throws BudgetExceeded once more than
/// max_states classes appear, Overflow if an index leaves 64 bits.
KernelTable kernel_closure(const SequenceOracle& f, unsigned base, std::uint64_t horizon = kDefaultHorizon,
                           std::size_t max_states = kDefaultMaxStates);

/// Throws ZeroInstability when the table does not give a zero-stable automaton.
Dfao dfao_from_kernel(const KernelTable& kt);

/// kernel_closure + dfao_from_kernel, certified by comparing with f on
/// [0, verify_to]; the horizon doubles on mismatch up to horizon_cap.
Dfao learn_dfao(const SequenceOracle& f, unsigned base, std::uint64_t verify_to,
                std::size_t max_states = kDefaultMaxStates, std::uint64_t horizon = kDefaultHorizon,
                std::uint64_t horizon_cap = 1U << 16);

}  // namespace autoseq
