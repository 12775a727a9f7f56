#include "autoseq/pumping.hpp"

#include <vector>

#include "autoseq/error.hpp"

namespace autoseq {

PumpWitness pump_witness(const Dfao& d, const BigInt& n) {
  const unsigned base = d.base();
  std::vector<unsigned> digits;
  for (BigInt m = n; m != 0; m /= base) digits.push_back(static_cast<unsigned>(m % base));
  if (digits.size() <= d.size()) {
    throw Error(ErrorKind::NoRepetition, "n = " + n.str() + " is below base^|Q|; no state must repeat");
  }
  std::vector<std::size_t> first_visit(d.size(), SIZE_MAX);
  Dfao::State s = d.initial();
  first_visit[s] = 0;
  for (std::size_t j = 1; j <= digits.size(); ++j) {
    s = d.next(s, digits[j - 1]);
    if (first_visit[s] != SIZE_MAX) {
      const std::size_t i = first_visit[s];
      PumpWitness w;
      w.l1 = static_cast<unsigned>(i);
      w.l2 = static_cast<unsigned>(j - i);
      w.l3 = static_cast<unsigned>(digits.size() - j);
      BigInt place = 1;
      for (std::size_t t = 0; t < j; ++t) {
        if (t == i) place = 1;
        (t < i ? w.z : w.y) += digits[t] * place;
        place *= base;
      }
      w.x = n;
      for (std::size_t t = 0; t < j; ++t) w.x /= base;
      return w;
    }
    first_visit[s] = j;
  }
  throw Error(ErrorKind::NoRepetition, "no repeated state along the digit run");
}

BigInt pumped_index(const PumpWitness& w, unsigned base, unsigned k) {
  const BigInt lam = base;
  const BigInt l1 = boost::multiprecision::pow(lam, w.l1);
  const BigInt l2 = boost::multiprecision::pow(lam, w.l2);
  const BigInt l2k = boost::multiprecision::pow(l2, k);
  return w.x * l1 * l2k + w.y * l1 * ((l2k - 1) / (l2 - 1)) + w.z;
}

Value eval_big(const Dfao& d, BigInt n) {
  Dfao::State s = d.initial();
  const BigInt base = d.base();
  while (n != 0) {
    s = d.next(s, static_cast<unsigned>(n % base));
    n /= base;
  }
  return d.output(s);
}

}  // namespace autoseq
