#pragma once

#include "jackpos/combinatorics.hpp"
#include "jackpos/falling_factorial.hpp"
#include "jackpos/multi_poly.hpp"

namespace jackpos {

// Sum over compatible colorings v of C(sigma), w of C(tau) (v <= w on
// intersecting blocks) of prod p_v prod r_w.
MultiPoly n_poly(const Permutation& sigma, const Permutation& tau, int d);
// Same polynomial through coarsenings S >= C(sigma), T >= C(tau) with
// injective compatible colorings.
MultiPoly n_poly_injective(const Permutation& sigma, const Permutation& tau, int d);

// Alpha = 1 polynomials in multirectangular coordinates.
MultiPoly ch1_multirect(const Partition& mu, int d);
MultiPoly shifted_schur_multirect(const Partition& mu, int d);
MultiPoly ko_multirect_sym(const Partition& mu, int d);
// Direct double sums over S_k x S_k, without grouping by classes.
MultiPoly shifted_schur_multirect_raw(const Partition& mu, int d);
// U may be any set-partition whose block sizes are mu.
MultiPoly ko_multirect_sym(const Partition& mu, int d, const SetPartition& U);
// Stanley's rectangle formula: sum over sigma tau = pi_mu of eps(tau) p^|C(sigma)| r^|C(tau)|.
MultiPoly ch1_rectangle(const Partition& mu);

// A^mu_{S,T} with x_i -> p_i and y_j -> r_j, in dimension max(s, t).
MultiPoly a_poly(const Partition& mu, const SetPartition& S, const SetPartition& T);
// Falling factorial expansion of A^mu_{S,T} assembled from B-values over refinements.
FFExpansion a_poly_ff(const Partition& mu, const SetPartition& S, const SetPartition& T);
Integer b_coeff(const Partition& mu, const SetPartition& S, const SetPartition& T);
Integer question_bad_sum(const SetPartition& S, const SetPartition& T, const SetPartition& U);
// (1/k!) sum_{S,T} sum_{v,w injective compatible} A^mu_{S,T}(p_v, r_w).
MultiPoly shifted_schur_via_a(const Partition& mu, int d);

// Rewrites P(p, r) in the variables p and q_i = r_i + ... + r_d, then negates
// every q; the q's are stored in the r slots. Multiplied by (-1)^sign_power.
MultiPoly to_p_minus_q(const MultiPoly& P, int sign_power);
bool nonnegative_coefficients(const MultiPoly& P);

}  // namespace jackpos
