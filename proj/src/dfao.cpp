#include "autoseq/dfao.hpp"

#include <set>

#include "autoseq/error.hpp"

namespace autoseq {

Dfao::Dfao(unsigned base, State initial, std::vector<std::vector<State>> delta, std::vector<Value> output)
    : base_(base) {
  if (base < 2) throw Error(ErrorKind::InvalidArgument, "automaton base must be at least 2");
  const std::size_t n = output.size();
  if (n == 0 || delta.size() != n || initial >= n) throw Error(ErrorKind::InvalidArgument, "malformed automaton");
  for (const auto& row : delta) {
    if (row.size() != base) throw Error(ErrorKind::InvalidArgument, "transition row length differs from base");
    for (State t : row) {
      if (t >= n) throw Error(ErrorKind::InvalidArgument, "transition to unknown state");
    }
  }
  std::vector<State> rename(n, n);
  std::vector<State> order{initial};
  rename[initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (State t : delta[order[i]]) {
      if (rename[t] == n) {
        rename[t] = order.size();
        order.push_back(t);
      }
    }
  }
  delta_.resize(order.size());
  output_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    output_[i] = output[order[i]];
    delta_[i].resize(base);
    for (unsigned d = 0; d < base; ++d) delta_[i][d] = rename[delta[order[i]][d]];
  }
  for (std::size_t s = 0; s < delta_.size(); ++s) {
    if (output_[delta_[s][0]] != output_[s]) {
      throw Error(ErrorKind::ZeroInstability, "reading a zero digit changes the output of state " + std::to_string(s));
    }
  }
}

Dfao Dfao::constant(unsigned base, const Value& v) {
  return Dfao(base, 0, {std::vector<State>(base, 0)}, {v});
}

Dfao::State Dfao::run_from(State s, std::uint64_t n) const {
  while (n != 0) {
    s = delta_[s][n % base_];
    n /= base_;
  }
  return s;
}

Dfao::State Dfao::run(std::uint64_t n) const { return run_from(0, n); }

std::vector<Value> Dfao::alphabet() const {
  std::set<Value> s(output_.begin(), output_.end());
  return {s.begin(), s.end()};
}

SequenceOracle as_oracle(const Dfao& d) {
  return [d](std::uint64_t n) { return d.eval(n); };
}

std::vector<unsigned> digits_lsd(std::uint64_t n, unsigned base) {
  std::vector<unsigned> out;
  while (n != 0) {
    out.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  return out;
}

}  // namespace autoseq
