#include "jackpos/multi_poly.hpp"

#include <numeric>

#include "jackpos/errors.hpp"

namespace jackpos {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(int d) : d_(d) {
  if (d < 0) throw InvalidArgument("negative dimension");
}

MultiPoly MultiPoly::constant(int d, const RatAlpha& c) {
  MultiPoly P(d);
  P.add_term(Exponent(2 * static_cast<std::size_t>(d), 0), c);
  return P;
}

MultiPoly MultiPoly::p(int d, int i) {
  Exponent e(2 * static_cast<std::size_t>(d), 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::r(int d, int i) {
  Exponent e(2 * static_cast<std::size_t>(d), 0);
  e.at(static_cast<std::size_t>(d + i - 1)) = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const RatAlpha& c) {
  MultiPoly P(static_cast<int>(e.size() / 2));
  P.add_term(e, c);
  return P;
}

RatAlpha MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatAlpha() : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

void MultiPoly::add_term(const Exponent& e, const RatAlpha& c) {
  if (c.is_zero()) return;
  if (e.size() != 2 * static_cast<std::size_t>(d_)) throw InvalidArgument("exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.d_ != d_) throw InvalidArgument("dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.d_ != d_) throw InvalidArgument("dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const RatAlpha& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.d_ != b.d_) throw InvalidArgument("dimension mismatch");
  MultiPoly out(a.d_);
  Exponent e(2 * static_cast<std::size_t>(a.d_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(d_, 1);
  for (unsigned i = 0; i < e; ++i) result *= *this;
  return result;
}

namespace {

std::vector<std::vector<Rational>> power_table(const std::vector<Rational>& p,
                                               const std::vector<Rational>& r, int d,
                                               const MultiPoly::Terms& terms) {
  if (p.size() != static_cast<std::size_t>(d) || r.size() != static_cast<std::size_t>(d))
    throw InvalidArgument("evaluation point has wrong dimension");
  int maxdeg = 0;
  for (const auto& [e, c] : terms)
    for (auto x : e) maxdeg = std::max<int>(maxdeg, x);
  std::vector<std::vector<Rational>> pw(2 * static_cast<std::size_t>(d));
  for (int v = 0; v < 2 * d; ++v) {
    const Rational& x = v < d ? p[v] : r[v - d];
    auto& row = pw[v];
    row.push_back(1);
    for (int k = 1; k <= maxdeg; ++k) row.push_back(row.back() * x);
  }
  return pw;
}

}  // namespace

RatAlpha MultiPoly::eval(const std::vector<Rational>& p, const std::vector<Rational>& r) const {
  auto pw = power_table(p, r, d_, terms_);
  PolyAlpha den = common_denominator();
  PolyAlpha acc;
  for (const auto& [e, c] : terms_) {
    Rational m = 1;
    for (std::size_t v = 0; v < e.size(); ++v) m *= pw[v][e[v]];
    if (m == 0) continue;
    PolyAlpha t = c.num() * PolyAlpha::exact_div(den, c.den());
    acc += t * m;
  }
  return RatAlpha(acc, den);
}

Rational MultiPoly::eval(const std::vector<Rational>& p, const std::vector<Rational>& r,
                         const Rational& alpha) const {
  auto pw = power_table(p, r, d_, terms_);
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = 1;
    for (std::size_t v = 0; v < e.size(); ++v) m *= pw[v][e[v]];
    if (m != 0) acc += m * c.eval(alpha);
  }
  return acc;
}

MultiPoly MultiPoly::specialize_alpha(const Rational& alpha) const {
  MultiPoly out(d_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.eval(alpha));
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != 2 * static_cast<std::size_t>(d_)) throw InvalidArgument("substitute: wrong image count");
  const int d2 = images.front().dim();
  std::vector<std::vector<MultiPoly>> pw(images.size());
  for (std::size_t v = 0; v < images.size(); ++v) pw[v].push_back(constant(d2, 1));
  MultiPoly out(d2);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(d2, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      while (pw[v].size() <= e[v]) pw[v].push_back(pw[v].back() * images[v]);
      if (e[v]) t *= pw[v][e[v]];
    }
    out += t;
  }
  return out;
}

bool MultiPoly::has_polynomial_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

PolyAlpha MultiPoly::common_denominator() const {
  PolyAlpha l = 1;
  for (const auto& [e, c] : terms_) {
    if (c.is_polynomial()) continue;
    PolyAlpha g = gcd(l, c.den());
    l = PolyAlpha::exact_div(l * c.den(), g).monic();
  }
  return l;
}

std::string exponent_to_string(const Exponent& e, int d) {
  std::string out;
  for (int v = 0; v < 2 * d; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += (v < d ? "p" : "r") + std::to_string(v < d ? v + 1 : v - d + 1);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    std::string m = exponent_to_string(e, d_);
    if (m != "1") out += "*" + m;
  }
  return out;
}

nlohmann::json to_json(const MultiPoly& P) {
  const int d = P.dim();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : P.terms()) {
    if (!c.is_polynomial())
      throw NonPolynomialAlpha("cannot serialize coefficient " + c.to_string());
    const auto& cs = c.num().coeffs();
    for (std::size_t a = 0; a < cs.size(); ++a) {
      if (cs[a] == 0) continue;
      nlohmann::json t;
      t["alpha"] = a;
      t["p"] = std::vector<int>(e.begin(), e.begin() + d);
      t["r"] = std::vector<int>(e.begin() + d, e.end());
      t["coeff"] = to_string(cs[a]);
      arr.push_back(std::move(t));
    }
  }
  return arr;
}

MultiPoly multipoly_from_json(const nlohmann::json& j, int d) {
  MultiPoly P(d);
  for (const auto& t : j) {
    auto p = t.at("p").get<std::vector<int>>();
    auto r = t.at("r").get<std::vector<int>>();
    if (p.size() != static_cast<std::size_t>(d) || r.size() != static_cast<std::size_t>(d))
      throw InvalidArgument("json term has wrong dimension");
    Exponent e;
    for (int x : p) e.push_back(static_cast<std::uint8_t>(x));
    for (int x : r) e.push_back(static_cast<std::uint8_t>(x));
    auto a = t.at("alpha").get<std::size_t>();
    P.add_term(e, RatAlpha(PolyAlpha::monomial(parse_rational(t.at("coeff").get<std::string>()), a)));
  }
  return P;
}

}  // namespace jackpos
