#pragma once

#include <string>

#include "jackpos/upoly.hpp"

namespace jackpos {

// Element of Q(alpha), kept as num/den with den monic and gcd(num, den) = 1.
class RatAlpha {
 public:
  RatAlpha() : den_(1) {}
  RatAlpha(const PolyAlpha& num);  // NOLINT
  RatAlpha(const Rational& c);     // NOLINT
  RatAlpha(long c);                // NOLINT
  RatAlpha(int c) : RatAlpha(static_cast<long>(c)) {}  // NOLINT
  RatAlpha(PolyAlpha num, PolyAlpha den);

  static RatAlpha alpha() { return RatAlpha(PolyAlpha::x()); }
  static RatAlpha alpha_pow(int e);

  const PolyAlpha& num() const { return num_; }
  const PolyAlpha& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Rational constant_value() const { return num_.coeff(0); }

  // Throws PoleEncountered when the denominator vanishes at v.
  Rational eval(const Rational& v) const;
  RatAlpha inverse() const;

  RatAlpha& operator+=(const RatAlpha& o);
  RatAlpha& operator-=(const RatAlpha& o);
  RatAlpha& operator*=(const RatAlpha& o);
  RatAlpha& operator/=(const RatAlpha& o);
  RatAlpha operator-() const;

  friend RatAlpha operator+(RatAlpha a, const RatAlpha& b) { return a += b; }
  friend RatAlpha operator-(RatAlpha a, const RatAlpha& b) { return a -= b; }
  friend RatAlpha operator*(RatAlpha a, const RatAlpha& b) { return a *= b; }
  friend RatAlpha operator/(RatAlpha a, const RatAlpha& b) { return a /= b; }
  friend bool operator==(const RatAlpha& a, const RatAlpha& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "alpha") const;

 private:
  void normalize();
  PolyAlpha num_;
  PolyAlpha den_;
};

}  // namespace jackpos
