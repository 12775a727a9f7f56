#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "autoseq/dfao.hpp"

namespace autoseq {

using BigInt = boost::multiprecision::cpp_int;

/// n = x * lambda^(l1 + l2) + y * lambda^l1 + z with z < lambda^l1,
/// y < lambda^l2 and x < lambda^l3.
struct PumpWitness {
  BigInt x = 0;
  BigInt y = 0;
  BigInt z = 0;
  unsigned l1 = 0;
  unsigned l2 = 1;
  unsigned l3 = 0;

  bool operator==(const PumpWitness&) const = default;
};

/// Splits the digit run of n at the first repeated state. Requires
/// n >= lambda^|Q|, else throws NoRepetition.
PumpWitness pump_witness(const Dfao& d, const BigInt& n);

/// x * lambda^(l1 + k*l2) + y * lambda^l1 * (lambda^(k*l2) - 1) / (lambda^l2 - 1) + z.
BigInt pumped_index(const PumpWitness& w, unsigned base, unsigned k);

/// eval on an arbitrary-size index.
Value eval_big(const Dfao& d, BigInt n);

}  // namespace autoseq
