#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "jackpos/multi_poly.hpp"
#include "jackpos/partition.hpp"

namespace jackpos {

// nullopt keeps alpha symbolic; a value specializes every computation to it.
using AlphaMode = std::optional<Rational>;

struct DiagramFunction {
  std::string name;
  int degree = 0;
  std::function<RatAlpha(const Partition&)> eval;
  // Set for functions that only make sense at one alpha (e.g. shifted Schur).
  AlphaMode alpha;
};

struct PStarExpansion {
  int k = 0;
  AlphaMode alpha;
  std::map<Partition, RatAlpha> coeffs;  // |nu| <= k; the empty partition is the constant
  RatAlpha eval(const Partition& lambda) const;
};

// sum_i (alpha lambda_i - i + 1/2)^k - (-i + 1/2)^k
RatAlpha p_star(int k, const Partition& lambda);
RatAlpha p_star(const Partition& nu, const Partition& lambda);
Rational p_star(const Partition& nu, const Partition& lambda, const Rational& alpha);

// z/(z+l) prod_i (z - alpha lambda_i + i)/(z - alpha lambda_i + i - 1)
RatAlpha psi(const Partition& lambda, const Rational& z);
Rational psi(const Partition& lambda, const Rational& z, const Rational& alpha);
// k [z^-k] log psi(lambda; z)
RatAlpha p_theta(int k, const Partition& lambda);

// Roots (a) and poles (b) of psi(r^p; z) = prod (z - a)/(z - b) in block form.
struct PsiFactors {
  std::vector<MultiPoly> zeros;
  std::vector<MultiPoly> poles;
};
PsiFactors psi_multirect_factors(int d);
// sum b^k - sum a^k over the block factors.
MultiPoly p_theta_multirect(int k, int d);

// Throws SingularSystem, DegreeGuardFailed.
PStarExpansion expand_in_pstar(const DiagramFunction& F, int k, const AlphaMode& alpha = {});
MultiPoly pstar_on_multirect(int k, int d);
MultiPoly pstar_on_multirect(const Partition& nu, int d);
// Throws DenominatorNotCleared when the result is not polynomial in alpha.
MultiPoly reconstruct_multirect(const DiagramFunction& F, int k, int d, const AlphaMode& alpha = {});

Rational shifted_schur(const Partition& mu, const Partition& lambda, int extra_rows = 0);
RatAlpha shifted_jack(const Partition& mu, const Partition& lambda);
Rational ko_via_shifted_schur(const Partition& mu, const Partition& lambda);

// Diagram functions used by reconstruction and the cross-checks.
DiagramFunction ch_function(const Partition& mu);
DiagramFunction ko_function(const Partition& mu);
DiagramFunction shifted_jack_function(const Partition& mu);
// alpha^{|mu| - mu_1} J*_mu, the normalization of the positivity conjecture.
DiagramFunction scaled_shifted_jack_function(const Partition& mu);
DiagramFunction shifted_schur_function(const Partition& mu);
// Ch at alpha = 1 through characters: (n)_k chi^lambda_{mu 1^{n-k}} / chi^lambda_{1^n}.
DiagramFunction ch1_character_function(const Partition& mu);
DiagramFunction pstar_function(const Partition& nu);
DiagramFunction ptheta_function(int k);

}  // namespace jackpos
