#pragma once

#include <functional>
#include <map>

#include "jackpos/partition.hpp"
#include "jackpos/symfun.hpp"

namespace jackpos {

struct AdmissibleTableau {
  Partition shape;
  std::map<Box, int> entries;

  // Equal entries never share a column, and T(i,j) != T(i',j-1) for i' < i.
  bool is_admissible() const;
  // Boxes (i,j), j > 1, with T(i,j) = T(i,j-1).
  std::vector<Box> critical_boxes() const;
  // prod over critical boxes of alpha (a+1) + (l+1).
  PolyAlpha weight() const;
};

// Brute-force stream of all admissible tableaux of shape lambda in which
// value v occurs tau_v times. Exponential; meant for small cross-checks.
void for_each_admissible(const Partition& lambda, const Partition& tau,
                         const std::function<void(const AdmissibleTableau&)>& f);

// Coefficient of m_tau in J_lambda.
PolyAlpha hatK(const Partition& lambda, const Partition& tau);
BasisExpansion jack_monomial(const Partition& lambda);
BasisExpansion jack_powersum(const Partition& lambda);
// Coefficient of p_tau in J_lambda.
PolyAlpha theta(const Partition& tau, const Partition& lambda);

PolyAlpha ch(const Partition& mu, const Partition& lambda);
PolyAlpha ko(const Partition& mu, const Partition& lambda);
// w^mu_nu, from theta at alpha = 2.
Rational zonal_spherical(const Partition& mu, const Partition& nu);

}  // namespace jackpos
