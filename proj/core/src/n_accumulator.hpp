#pragma once

// Internal helpers shared by the alpha = 1 and alpha = 2 formulas.

#include <map>
#include <vector>

#include "jackpos/combinatorics.hpp"
#include "jackpos/multi_poly.hpp"

namespace jackpos::detail {

// Integer-coefficient accumulator; converted to MultiPoly once at the end.
using IntAcc = std::map<Exponent, long long, GradedLex>;

void add_into(IntAcc& acc, const IntAcc& src, long long scale);
MultiPoly to_multipoly(const IntAcc& acc, int d, const Rational& divisor = 1);
// meets[j] lists the blocks of S intersecting block j of T.
std::vector<std::vector<int>> meeting_blocks(const SetPartition& S, const SetPartition& T);
// Sum over v on blocks of S and w on blocks of T with v <= w on intersecting
// blocks of prod p_v prod r_w. Memoized.
const IntAcc& n_cached(const SetPartition& S, const SetPartition& T, int d);

}  // namespace jackpos::detail
