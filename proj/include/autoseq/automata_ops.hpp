#pragma once

#include <cstdint>
#include <functional>

#include "autoseq/dfao.hpp"

namespace autoseq {

/// Moore partition refinement; the result is the minimal LSD-first automaton
/// in canonical state order.
Dfao minimize(const Dfao& d);

/// Same transitions, output composed with pi.
Dfao map_values(const Dfao& d, const std::function<Value(const Value&)>& pi);

/// Pair construction on reachable pairs with the pointwise product as output.
/// Throws InvalidArgument on differing bases.
Dfao product(const Dfao& d1, const Dfao& d2);

enum class BaseDirection { Up, Down };

/// Up: read k digits at a time (base lambda^k). Down: the base of d must be
/// mu^k; the base-mu automaton is rebuilt from the kernel with budget
/// |Q| * (1 + mu + ... + mu^(k-1)). Throws BudgetExceeded (down only).
Dfao base_power(const Dfao& d, unsigned k, BaseDirection direction);

/// Automaton for n -> f(a*n + b), f computed by d.
Dfao restrict_progression(const Dfao& d, std::uint64_t a, std::uint64_t b);

/// Automaton for n -> f(n / p^nu_p(n)) (n >= 1), with p the base of d, which
/// must be prime. The initial state's zero transition becomes a self-loop;
/// when the initial state is re-entered elsewhere a fresh copy of it is used.
Dfao remove_p_powers(const Dfao& d);

}  // namespace autoseq
