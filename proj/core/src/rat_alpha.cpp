#include "jackpos/rat_alpha.hpp"

#include "jackpos/errors.hpp"

namespace jackpos {

RatAlpha::RatAlpha(const PolyAlpha& num) : num_(num), den_(1) {}
RatAlpha::RatAlpha(const Rational& c) : num_(c), den_(1) {}
RatAlpha::RatAlpha(long c) : num_(c), den_(1) {}

RatAlpha::RatAlpha(PolyAlpha num, PolyAlpha den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleEncountered("zero denominator in Q(alpha)");
  normalize();
}

RatAlpha RatAlpha::alpha_pow(int e) {
  if (e >= 0) return RatAlpha(PolyAlpha::monomial(1, static_cast<std::size_t>(e)));
  return RatAlpha(PolyAlpha(1), PolyAlpha::monomial(1, static_cast<std::size_t>(-e)));
}

void RatAlpha::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (!den_.is_constant()) {
    PolyAlpha g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = PolyAlpha::exact_div(num_, g);
      den_ = PolyAlpha::exact_div(den_, g);
    }
  }
  if (!(den_.lead() == 1)) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatAlpha::eval(const Rational& v) const {
  Rational d = den_.eval(v);
  if (d == 0) throw PoleEncountered("alpha = " + jackpos::to_string(v));
  return num_.eval(v) / d;
}

RatAlpha RatAlpha::inverse() const {
  if (is_zero()) throw PoleEncountered("inverse of zero");
  RatAlpha r;
  r.num_ = den_;
  r.den_ = num_;
  if (!(r.den_.lead() == 1)) {
    Rational inv = 1 / r.den_.lead();
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RatAlpha& RatAlpha::operator+=(const RatAlpha& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = 1;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatAlpha& RatAlpha::operator-=(const RatAlpha& o) { return *this += -o; }

RatAlpha& RatAlpha::operator*=(const RatAlpha& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatAlpha();
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  if (is_constant()) {
    Rational c = num_.coeff(0);
    *this = o;
    num_ *= c;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  if (!den_.is_one()) normalize();
  return *this;
}

RatAlpha& RatAlpha::operator/=(const RatAlpha& o) { return *this *= o.inverse(); }

RatAlpha RatAlpha::operator-() const {
  RatAlpha r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatAlpha::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace jackpos
