#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackpos/multi_poly.hpp"

namespace jackpos {

// Basis element alpha^c * prod (p_i)_{a_i} * prod (r_j)_{b_j}.
struct FFKey {
  int alpha = 0;
  Exponent e;
  friend bool operator<(const FFKey& x, const FFKey& y) {
    if (x.e != y.e) return GradedLex{}(x.e, y.e);
    return x.alpha < y.alpha;
  }
  friend bool operator==(const FFKey& x, const FFKey& y) = default;
};

class FFExpansion {
 public:
  using Terms = std::map<FFKey, Rational>;
  explicit FFExpansion(int d = 1) : d_(d) {}
  int dim() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const FFKey& k) const;
  void add(const FFKey& k, const Rational& c);
  friend bool operator==(const FFExpansion& a, const FFExpansion& b) = default;
  std::string to_string() const;

 private:
  int d_;
  Terms terms_;
};

std::string to_string(const FFKey& k, int d);

struct Certificate {
  bool pass = true;
  std::vector<std::pair<FFKey, Rational>> witnesses;
};

Integer stirling2(unsigned n, unsigned k);
// Throws NonPolynomialAlpha on any coefficient with a nontrivial alpha-denominator.
FFExpansion to_falling_factorial(const MultiPoly& P);
MultiPoly from_falling_factorial(const FFExpansion& F);
Certificate is_nonnegative(const FFExpansion& F);
// S_k(n) = 1^k + ... + n^k as a polynomial in n.
UPoly faulhaber(unsigned k);

nlohmann::json to_json(const FFExpansion& F);
nlohmann::json to_json(const Certificate& c, int d);

}  // namespace jackpos
