#include <gtest/gtest.h>

#include <random>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/symfun.hpp"

using namespace jackpos;

namespace {

// Functions [k] -> [l(mu)] constant on the cycles of the canonical nu-permutation
// with fiber sizes mu.
Integer brute_L(const Partition& nu, const Partition& mu) {
  const std::vector<int>& c = nu.parts();
  std::vector<int> fiber(mu.length(), 0);
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == c.size()) {
      for (int j = 0; j < mu.length(); ++j)
        if (fiber[j] != mu.parts()[j]) return;
      count += 1;
      return;
    }
    for (int j = 0; j < mu.length(); ++j) {
      fiber[j] += c[i];
      rec(i + 1);
      fiber[j] -= c[i];
    }
  };
  rec(0);
  return count;
}

Partition add_one(const Partition& p) { return p.with_parts(1, 1); }

}  // namespace

TEST(L, Examples) {
  EXPECT_EQ(L(Partition{1, 1}, Partition{2}), 1);
  EXPECT_EQ(L(Partition{1, 1}, Partition{1, 1}), 2);
  EXPECT_EQ(L(Partition{2}, Partition{1, 1}), 0);
  EXPECT_THROW(L(Partition{2}, Partition{1}), SizeMismatch);
  for (int k = 1; k <= 6; ++k)
    for (const Partition& nu : partitions_of(k)) EXPECT_EQ(L(nu, Partition{k}), 1);
}

TEST(L, MatchesBruteForceAndTriangular) {
  for (int k = 1; k <= 6; ++k)
    for (const Partition& nu : partitions_of(k))
      for (const Partition& mu : partitions_of(k)) {
        Integer v = L(nu, mu);
        EXPECT_EQ(v, brute_L(nu, mu));
        if (!refines(nu, mu)) EXPECT_EQ(v, 0) << nu.to_string() << " " << mu.to_string();
      }
}

TEST(L, Stability) {
  for (int k = 1; k <= 5; ++k)
    for (const Partition& nu : partitions_of(k))
      for (const Partition& mu : partitions_of(k))
        EXPECT_EQ(L(add_one(nu), add_one(mu)), Integer(nu.multiplicity(1) + 1) * L(nu, mu));
}

TEST(Kostka, Examples) {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(kostka(l, l), 1);
  EXPECT_EQ(kostka(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(kostka(Partition{2}, Partition{1, 1}), 1);
  EXPECT_EQ(kostka(Partition{1, 1}, Partition{2}), 0);
  EXPECT_THROW(kostka(Partition{2}, Partition{1}), SizeMismatch);
}

TEST(SytCount, Examples) {
  EXPECT_EQ(syt_count(Partition{2, 2}), 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(syt_count(Partition{n}), 1);
  EXPECT_EQ(syt_count(Partition{2, 1}, Partition{1}), 2);
  EXPECT_THROW(syt_count(Partition{2}, Partition{1, 1}), NotContained);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(syt_count(l), kostka(l, Partition(std::vector<int>(n, 1))));
}

TEST(Character, Examples) {
  for (const Partition& t : partitions_of(4)) EXPECT_EQ(character(Partition{4}, t), 1);
  EXPECT_EQ(character(Partition{1, 1}, Partition{2}), -1);
  EXPECT_EQ(character(Partition{2, 1}, Partition{2, 1}), 0);
  EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(character(Partition{2, 1}, Partition{3}), -1);
}

TEST(Character, Orthogonality) {
  for (int k = 1; k <= 6; ++k)
    for (const Partition& a : partitions_of(k))
      for (const Partition& b : partitions_of(k)) {
        Rational s = 0;
        for (const Partition& t : partitions_of(k))
          s += Rational(factorial(k)) / Rational(z(t)) * Rational(character(a, t) * character(b, t));
        EXPECT_EQ(s, a == b ? Rational(factorial(k)) : Rational(0));
      }
}

TEST(Character, YoungPermutationModule) {
  // The induced character from the Young subgroup S_mu is sum_lambda K^lambda_mu chi^lambda,
  // and its value on the class tau is L(tau, mu).
  for (int k = 1; k <= 6; ++k)
    for (const Partition& mu : partitions_of(k))
      for (const Partition& t : partitions_of(k)) {
        Integer s = 0;
        for (const Partition& l : partitions_of(k)) s += kostka(l, mu) * character(l, t);
        EXPECT_EQ(s, L(t, mu));
      }
}

TEST(Character, Frobenius) {
  // sum_tau chi^lambda_tau p_tau / z_tau has m-coefficients K^lambda_tau.
  for (int k = 1; k <= 6; ++k)
    for (const Partition& l : partitions_of(k)) {
      BasisExpansion e;
      e.basis = BasisExpansion::Basis::powersum;
      for (const Partition& t : partitions_of(k))
        e.add(t, RatAlpha(Rational(character(l, t)) / Rational(z(t))));
      BasisExpansion m = powersum_to_monomial(e);
      for (const Partition& t : partitions_of(k)) EXPECT_EQ(m.coeff(t), RatAlpha(Rational(kostka(l, t))));
    }
}

TEST(Character, AgreesWithJackAtOne) {
  for (int k = 1; k <= 6; ++k)
    for (const Partition& l : partitions_of(k)) {
      Rational H = hook_products(l).first.eval(1);
      for (const Partition& t : partitions_of(k))
        EXPECT_EQ(H * Rational(character(l, t)) / Rational(z(t)), theta(t, l).eval(1));
    }
}

TEST(BasisChange, Examples) {
  BasisExpansion m2;
  m2.add(Partition{2}, 1);
  BasisExpansion p = monomial_to_powersum(m2);
  EXPECT_EQ(p.basis, BasisExpansion::Basis::powersum);
  EXPECT_EQ(p.coeffs.size(), 1U);
  EXPECT_EQ(p.coeff(Partition{2}), RatAlpha(1));

  BasisExpansion m11;
  m11.add(Partition{1, 1}, 1);
  BasisExpansion q = monomial_to_powersum(m11);
  EXPECT_EQ(q.coeff(Partition{1, 1}), RatAlpha(Rational(1, 2)));
  EXPECT_EQ(q.coeff(Partition{2}), RatAlpha(Rational(-1, 2)));
}

TEST(BasisChange, RandomRoundTrip) {
  std::mt19937 g(5);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int k = 1; k <= 5; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      BasisExpansion e;
      for (const Partition& t : partitions_of(k))
      {
        Rational lead(c(g), 1 + (g() % 4));
        lead.canonicalize();
        e.add(t, RatAlpha(UPoly{lead, c(g)}));
      }
      BasisExpansion back = powersum_to_monomial(monomial_to_powersum(e));
      for (const Partition& t : partitions_of(k)) EXPECT_EQ(back.coeff(t), e.coeff(t));
    }
}
