#include "jackpos/upoly.hpp"

#include "jackpos/errors.hpp"

namespace jackpos {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t deg) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rational(0));
  p.c_[deg] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& v) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  UPoly r = *this;
  Rational inv = 1 / c_.back();
  r *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

bool UPoly::nonnegative_coeffs(bool integral) const {
  for (const auto& c : c_) {
    if (c < 0) return false;
    if (integral && c.get_den() != 1) return false;
  }
  return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational inv = 1 / b.lead();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = rem[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("inexact polynomial division");
  return q;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = 1;
  UPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += jackpos::to_string(a);
      continue;
    }
    if (a != 1) out += jackpos::to_string(a) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace jackpos
