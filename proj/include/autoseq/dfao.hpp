#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "autoseq/value.hpp"

namespace autoseq {

/// Term source n -> a(n) for n >= 0. Must be deterministic and safe to call
/// from several threads.
using SequenceOracle = std::function<Value(std::uint64_t)>;

/// Deterministic finite automaton with output reading base-lambda digits
/// least significant first. Construction prunes unreachable states,
/// renumbers the rest in breadth-first order from the initial state (so the
/// initial state is always 0 and equal automata compare equal), and rejects
/// automata that are not zero-stable.
class Dfao {
 public:
  using State = std::size_t;

  /// Throws InvalidArgument on malformed tables, ZeroInstability when some
  /// reachable s has output(delta(s, 0)) != output(s).
  Dfao(unsigned base, State initial, std::vector<std::vector<State>> delta, std::vector<Value> output);

  static Dfao constant(unsigned base, const Value& v);

  unsigned base() const noexcept { return base_; }
  std::size_t size() const noexcept { return output_.size(); }
  State initial() const noexcept { return 0; }
  State next(State s, unsigned digit) const { return delta_[s][digit]; }
  const Value& output(State s) const { return output_[s]; }
  const std::vector<std::vector<State>>& delta() const noexcept { return delta_; }
  const std::vector<Value>& outputs() const noexcept { return output_; }

  /// State reached after reading the digits of n (none for n = 0).
  State run(std::uint64_t n) const;
  State run_from(State s, std::uint64_t n) const;
  Value eval(std::uint64_t n) const { return output_[run(n)]; }

  /// Distinct output values, ascending.
  std::vector<Value> alphabet() const;

  bool operator==(const Dfao&) const = default;

 private:
  unsigned base_;
  std::vector<std::vector<State>> delta_;
  std::vector<Value> output_;
};

inline Value eval(const Dfao& d, std::uint64_t n) { return d.eval(n); }

SequenceOracle as_oracle(const Dfao& d);

/// Base-lambda digits of n, least significant first (empty for 0).
std::vector<unsigned> digits_lsd(std::uint64_t n, unsigned base);

}  // namespace autoseq
