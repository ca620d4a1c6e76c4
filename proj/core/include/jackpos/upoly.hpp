#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jackpos/rational.hpp"

namespace jackpos {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// Trailing zeros are never stored, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(long c);             // NOLINT
  UPoly(int c) : UPoly(static_cast<long>(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs);

  static UPoly x() { return monomial(1, 1); }
  static UPoly monomial(const Rational& c, std::size_t deg);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& v) const;
  UPoly monic() const;
  UPoly derivative() const;
  // Nonnegative, and integral when `integral` is set.
  bool nonnegative_coeffs(bool integral = false) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  UPoly operator-() const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Throws if b does not divide a.
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  UPoly pow(unsigned e) const;

  // e.g. "1 + 2*alpha - 1/2*alpha^3"
  std::string to_string(std::string_view var = "alpha") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

using PolyAlpha = UPoly;

}  // namespace jackpos
