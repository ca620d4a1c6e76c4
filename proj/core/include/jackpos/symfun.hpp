#pragma once

#include <map>

#include "jackpos/partition.hpp"
#include "jackpos/rat_alpha.hpp"

namespace jackpos {

struct BasisExpansion {
  enum class Basis { monomial, powersum };
  Basis basis = Basis::monomial;
  std::map<Partition, RatAlpha> coeffs;  // zero entries are never stored

  void add(const Partition& key, const RatAlpha& c);
  RatAlpha coeff(const Partition& key) const;
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// p_nu = sum_mu L(nu, mu) m_mu.
Integer L(const Partition& nu, const Partition& mu);
Integer kostka(const Partition& lambda, const Partition& tau);
// Standard tableaux of skew shape lambda/mu; throws NotContained.
Integer syt_count(const Partition& lambda, const Partition& mu = {});
Integer character(const Partition& lambda, const Partition& tau);

BasisExpansion monomial_to_powersum(const BasisExpansion& e);
BasisExpansion powersum_to_monomial(const BasisExpansion& e);

}  // namespace jackpos
