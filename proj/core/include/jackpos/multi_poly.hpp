#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackpos/rat_alpha.hpp"

namespace jackpos {

// Exponents of p_1..p_d followed by r_1..r_d.
using Exponent = std::vector<std::uint8_t>;

// Graded lexicographic order with p_1 < ... < p_d < r_1 < ... < r_d:
// lower total degree first, ties broken from the largest variable down.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, RatAlpha, GradedLex>;

  explicit MultiPoly(int d = 1);
  static MultiPoly constant(int d, const RatAlpha& c);
  static MultiPoly p(int d, int i);  // 1-based
  static MultiPoly r(int d, int i);
  static MultiPoly monomial(const Exponent& e, const RatAlpha& c);

  int dim() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RatAlpha coeff(const Exponent& e) const;
  int total_degree() const;

  void add_term(const Exponent& e, const RatAlpha& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const RatAlpha& s);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const RatAlpha& s) { return a *= s; }
  friend MultiPoly operator*(const RatAlpha& s, MultiPoly a) { return a *= s; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(unsigned e) const;

  // Evaluation at rational coordinates with alpha kept symbolic.
  RatAlpha eval(const std::vector<Rational>& p, const std::vector<Rational>& r) const;
  Rational eval(const std::vector<Rational>& p, const std::vector<Rational>& r,
                const Rational& alpha) const;
  MultiPoly specialize_alpha(const Rational& alpha) const;
  // Replace variable v (0..2d-1, p's first) by images[v]; all images share a dimension.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  bool has_polynomial_coefficients() const;
  // Monic lcm of all coefficient denominators.
  PolyAlpha common_denominator() const;

  std::string to_string() const;

 private:
  int d_;
  Terms terms_;
};

// Array of {"alpha", "p", "r", "coeff"} objects in canonical order.
// Requires polynomial alpha-coefficients.
nlohmann::json to_json(const MultiPoly& P);
MultiPoly multipoly_from_json(const nlohmann::json& j, int d);

std::string exponent_to_string(const Exponent& e, int d);

}  // namespace jackpos
