#pragma once

#include <map>

#include "jackpos/combinatorics.hpp"
#include "jackpos/multi_poly.hpp"

namespace jackpos {

// N for three pair-partitions: v colors the blocks of join(S0, S2) (p side),
// w colors the blocks of join(S0, S1) (r side).
MultiPoly n2_poly(const PairPartition& S0, const PairPartition& S1, const PairPartition& S2, int d);

MultiPoly ch2_multirect(const Partition& mu, int d);
// (S1, S2) must have type mu.
MultiPoly ch2_multirect(const Partition& mu, int d, const PairPartition& S1, const PairPartition& S2);
MultiPoly zstar_multirect(const Partition& mu, int d);
MultiPoly ko2_multirect(const Partition& mu, int d);
// U must have block sizes 2 mu.
MultiPoly ko2_multirect(const Partition& mu, int d, const SetPartition& U);

// Number of ordered pairs (S1, S2) of each type, by enumeration.
std::map<Partition, Integer> pair_type_census(int k);
// (2k)! / (z_nu 2^{l(nu)})
Integer pair_type_count(const Partition& nu);

}  // namespace jackpos
