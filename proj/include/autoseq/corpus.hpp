#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

using Rng = std::mt19937_64;

/// Draws use rng() % n only, so a seed gives the same corpus everywhere.
/// p in {2, 3, 5}; f1 with preperiod <= 3, period <= 4 and f1(0) = 1;
/// f2 a character mod d <= 12 vanishing on multiples of p, or a finite
/// support of at most 4 prime powers q^e <= 50 (q in {2,...,13}, q != p)
/// whose product stays below 5 * 10^4.
TheoremFormSpec random_spec(Rng& rng);
std::vector<TheoremFormSpec> spec_corpus(std::uint64_t seed, std::size_t count);

/// Zero-stable automaton with the given number of states before pruning:
/// outputs are constant along the zero transitions.
Dfao random_dfao(Rng& rng, unsigned base, std::size_t states);

/// Value pool used by the generators: 0, 1, -1, i, -i, 2, 1/2, e(1/3).
const std::vector<Value>& value_pool();

}  // namespace autoseq
