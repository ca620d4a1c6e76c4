#include <gtest/gtest.h>

#include <random>

#include "jackpos/errors.hpp"
#include "jackpos/falling_factorial.hpp"
#include "jackpos/multi_poly.hpp"
#include "jackpos/rat_alpha.hpp"

using namespace jackpos;

namespace {

Rational canonical(long a, long b) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

// Set-partitions of an n-set into k blocks, counted by brute-force label assignment.
long brute_stirling2(int n, int k) {
  if (n == 0) return k == 0;
  long count = 0;
  std::vector<int> lab(n, 0);
  // restricted growth strings
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      count += (mx == k);
      return;
    }
    for (int v = 0; v <= mx && v < k; ++v) {
      lab[i] = v;
      rec(i + 1, std::max(mx, v + 1));
    }
  };
  rec(0, 0);
  return count;
}

Exponent ex(std::initializer_list<int> v) {
  Exponent e;
  for (int x : v) e.push_back(static_cast<std::uint8_t>(x));
  return e;
}

MultiPoly random_poly(std::mt19937& g, int d) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-5, 5), apow(0, 2);
  MultiPoly P(d);
  for (int t = 0; t < 6; ++t) {
    Exponent e(2 * d);
    for (auto& x : e) x = static_cast<std::uint8_t>(deg(g));
    P.add_term(e, RatAlpha(UPoly::monomial(canonical(coef(g), 1 + apow(g)), apow(g))));
  }
  return P;
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(canonical(6, 4)), "3/2");
  EXPECT_EQ(to_string(canonical(4, 2)), "2");
  EXPECT_EQ(to_string(canonical(0, 7)), "0");
  EXPECT_EQ(to_string(canonical(3, -6)), "-1/2");
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
}

TEST(Rational, FactorialBinomialFalling) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(falling(5, 3), 60);
  EXPECT_EQ(falling(2, 3), 0);
}

TEST(UPoly, ArithmeticAndDivision) {
  UPoly a{1, 1};   // 1 + x
  UPoly b{-1, 1};  // -1 + x
  EXPECT_EQ(a * b, (UPoly{-1, 0, 1}));
  EXPECT_EQ(UPoly::exact_div(a * b, a), b);
  EXPECT_EQ(gcd(a * b, a * a), a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3).eval(2), 27);
  EXPECT_EQ(UPoly({0, Rational(1, 2)}).to_string(), "1/2*alpha");
}

TEST(RatAlpha, FieldAxiomsOnRandomInputs) {
  std::mt19937 g(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    UPoly a{c(g), c(g), c(g)}, b{c(g), c(g), 1};
    if (a.is_zero() || b.is_zero()) continue;
    RatAlpha x(a, b);
    EXPECT_EQ(x * x.inverse(), RatAlpha(1));
    EXPECT_EQ(x / x, RatAlpha(1));
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_TRUE(x.den().lead() == 1);
  }
}

TEST(RatAlpha, CanonicalForm) {
  RatAlpha x(UPoly{2, 2}, UPoly{2, 2});
  EXPECT_EQ(x, RatAlpha(1));
  RatAlpha y(UPoly{0, 1}, UPoly{0, 2});  // alpha / (2 alpha)
  EXPECT_EQ(y, RatAlpha(Rational(1, 2)));
  EXPECT_THROW(RatAlpha(1, UPoly{-1, 1}).eval(1), PoleEncountered);
}

TEST(Stirling2, MatchesBruteForce) {
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), brute_stirling2(n, k)) << n << "," << k;
}

TEST(Stirling2, Recurrence) {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= 12; ++k)
      EXPECT_EQ(stirling2(n, k), Integer(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST(FallingFactorial, Examples) {
  // p^2 -> (p)_2 + (p)_1
  FFExpansion f = to_falling_factorial(MultiPoly::p(1, 1).pow(2));
  EXPECT_EQ(f.terms().size(), 2U);
  EXPECT_EQ(f.coeff({0, ex({2, 0})}), 1);
  EXPECT_EQ(f.coeff({0, ex({1, 0})}), 1);
  // p r stays
  FFExpansion g = to_falling_factorial(MultiPoly::p(1, 1) * MultiPoly::r(1, 1));
  EXPECT_EQ(g.terms().size(), 1U);
  EXPECT_EQ(g.coeff({0, ex({1, 1})}), 1);
  // r^3 -> (r)_3 + 3 (r)_2 + (r)_1
  FFExpansion h = to_falling_factorial(MultiPoly::r(1, 1).pow(3));
  EXPECT_EQ(h.coeff({0, ex({0, 3})}), 1);
  EXPECT_EQ(h.coeff({0, ex({0, 2})}), 3);
  EXPECT_EQ(h.coeff({0, ex({0, 1})}), 1);
}

TEST(FallingFactorial, InverseExamples) {
  FFExpansion f(1);
  f.add({0, ex({2, 0})}, 1);
  EXPECT_EQ(from_falling_factorial(f), MultiPoly::p(1, 1).pow(2) - MultiPoly::p(1, 1));
  EXPECT_TRUE(from_falling_factorial(FFExpansion(1)).is_zero());
  FFExpansion g(1);
  g.add({0, ex({1, 2})}, 1);
  MultiPoly p = MultiPoly::p(1, 1), r = MultiPoly::r(1, 1);
  EXPECT_EQ(from_falling_factorial(g), p * r * r - p * r);
}

TEST(FallingFactorial, RejectsRationalFunctions) {
  MultiPoly P = MultiPoly::constant(1, RatAlpha(1, UPoly{1, 1}));
  EXPECT_THROW(to_falling_factorial(P), NonPolynomialAlpha);
}

TEST(FallingFactorial, RoundTripAndPointEvaluation) {
  std::mt19937 g(11);
  std::uniform_int_distribution<int> pt(0, 10);
  for (int d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      MultiPoly P = random_poly(g, d);
      FFExpansion F = to_falling_factorial(P);
      EXPECT_EQ(from_falling_factorial(F), P);
      std::vector<Rational> p(d), r(d);
      for (auto& x : p) x = pt(g);
      for (auto& x : r) x = pt(g);
      Rational a = pt(g);
      // evaluate F directly as a falling-factorial sum
      Rational direct = 0;
      for (const auto& [key, c] : F.terms()) {
        Rational t = c;
        for (int i = 0; i < key.alpha; ++i) t *= a;
        for (int i = 0; i < d; ++i) t *= falling(p[i], key.e[i]) * falling(r[i], key.e[d + i]);
        direct += t;
      }
      EXPECT_EQ(P.eval(p, r, a), direct);
    }
}

TEST(FallingFactorial, Certificates) {
  FFExpansion ok(1);
  ok.add({0, ex({1, 2})}, Rational(1, 2));
  EXPECT_TRUE(is_nonnegative(ok).pass);

  FFExpansion bad(1);
  bad.add({1, ex({1, 0})}, -1);
  Certificate c = is_nonnegative(bad);
  EXPECT_FALSE(c.pass);
  ASSERT_EQ(c.witnesses.size(), 1U);
  EXPECT_EQ(c.witnesses[0].second, -1);

  // p r^2 - p^2 r: the coefficient of (p)_2 (r)_1 is -1
  MultiPoly p = MultiPoly::p(1, 1), r = MultiPoly::r(1, 1);
  Certificate s = is_nonnegative(to_falling_factorial(p * r * r - p * p * r));
  EXPECT_FALSE(s.pass);
  bool seen = false;
  for (const auto& [k, v] : s.witnesses)
    if (k.e == ex({2, 1}) && v == -1) seen = true;
  EXPECT_TRUE(seen);
}

TEST(Faulhaber, MatchesDirectSums) {
  EXPECT_EQ(faulhaber(0), (UPoly{0, 1}));
  EXPECT_EQ(faulhaber(1), (UPoly{0, Rational(1, 2), Rational(1, 2)}));
  for (unsigned k = 0; k <= 8; ++k) {
    UPoly S = faulhaber(k);
    Integer acc = 0;
    EXPECT_EQ(S.eval(0), 0);
    for (int n = 1; n <= 20; ++n) {
      Integer t = 1;
      for (unsigned j = 0; j < k; ++j) t *= n;
      acc += t;
      EXPECT_EQ(S.eval(n), Rational(acc));
    }
  }
}

TEST(MultiPoly, JsonRoundTripAndOrder) {
  MultiPoly p1 = MultiPoly::p(2, 1), r2 = MultiPoly::r(2, 2);
  MultiPoly P = p1 * r2 * RatAlpha(UPoly{1, 1}) + p1 - r2 * r2;
  nlohmann::json j = to_json(P);
  EXPECT_EQ(multipoly_from_json(j, 2), P);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["p"], nlohmann::json::array({1, 0}));
  EXPECT_EQ(j[0]["coeff"], "1");
}

TEST(MultiPoly, SubstituteAndSpecialize) {
  MultiPoly p = MultiPoly::p(1, 1), r = MultiPoly::r(1, 1);
  MultiPoly P = p * r * RatAlpha::alpha();
  MultiPoly Q = P.substitute({r, p});
  EXPECT_EQ(Q, P);
  EXPECT_EQ(P.specialize_alpha(3), p * r * RatAlpha(3));
  EXPECT_EQ(P.eval({2}, {5}, 3), 30);
}
