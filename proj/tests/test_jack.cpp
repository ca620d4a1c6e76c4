#include <gtest/gtest.h>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/symfun.hpp"

using namespace jackpos;

namespace {

// Knop-Sahi sum straight from the definition: every filling with content tau,
// checked cell by cell.
PolyAlpha brute_hatK(const Partition& lambda, const Partition& tau) {
  std::vector<Box> boxes = lambda.boxes();
  std::vector<int> left(tau.parts());
  std::map<Box, int> T;
  PolyAlpha total;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == boxes.size()) {
      PolyAlpha w = 1;
      for (const auto& [b, v] : T) {
        for (int i = 1; i < b.row; ++i) {
          if (T.at({i, b.col}) == v) return;
          if (b.col > 1 && T.at({i, b.col - 1}) == v) return;
        }
        if (b.col > 1 && T.at({b.row, b.col - 1}) == v)
          w *= UPoly{Rational(lambda.leg(b) + 1), Rational(lambda.arm(b) + 1)};
      }
      total += w;
      return;
    }
    for (std::size_t v = 0; v < left.size(); ++v) {
      if (!left[v]) continue;
      --left[v];
      T[boxes[idx]] = static_cast<int>(v) + 1;
      rec(idx + 1);
      ++left[v];
    }
    T.erase(boxes[idx]);
  };
  rec(0);
  return total;
}

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

}  // namespace

TEST(HatK, Examples) {
  EXPECT_EQ(hatK(Partition{2}, Partition{2}), (UPoly{1, 1}));
  EXPECT_EQ(hatK(Partition{2}, Partition{1, 1}), UPoly(2));
  EXPECT_EQ(hatK(Partition{1, 1}, Partition{2}), UPoly());
  EXPECT_EQ(hatK(Partition{2, 1}, Partition{2, 1}), (UPoly{2, 1}));
  EXPECT_EQ(hatK(Partition{2, 1}, Partition{1, 1, 1}), UPoly(6));
  EXPECT_THROW(hatK(Partition{2}, Partition{1}), SizeMismatch);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(hatK(l, ones(n)), UPoly(Rational(factorial(n))));
}

TEST(HatK, MatchesDefinitionByBruteForce) {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& l : partitions_of(n))
      for (const Partition& t : partitions_of(n))
        EXPECT_EQ(hatK(l, t), brute_hatK(l, t)) << l.to_string() << " " << t.to_string();
}

TEST(HatK, LibraryAdmissibleStreamAgrees) {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& l : partitions_of(n))
      for (const Partition& t : partitions_of(n)) {
        PolyAlpha s;
        for_each_admissible(l, t, [&](const AdmissibleTableau& T) {
          EXPECT_TRUE(T.is_admissible());
          s += T.weight();
        });
        EXPECT_EQ(s, hatK(l, t));
      }
}

TEST(HatK, SchurCaseAtAlphaOne) {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& l : partitions_of(n)) {
      Rational H = hook_products(l).first.eval(1);
      for (const Partition& t : partitions_of(n)) EXPECT_EQ(hatK(l, t).eval(1), H * Rational(kostka(l, t)));
    }
}

TEST(HatK, DominanceSupport) {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& l : partitions_of(n))
      for (const Partition& t : partitions_of(n))
        if (!dominates(l, t)) EXPECT_TRUE(hatK(l, t).is_zero());
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(Partition{2}, Partition{2}), (UPoly{0, 1}));
  EXPECT_EQ(theta(Partition{1, 1}, Partition{2}), UPoly(1));
  for (int n = 1; n <= 6; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(theta(ones(n), l), UPoly(1));
}

TEST(Theta, OneRowClosedForm) {
  for (int k = 1; k <= 5; ++k)
    for (const Partition& nu : partitions_of(k))
      EXPECT_EQ(theta(nu, Partition{k}),
                UPoly::monomial(Rational(factorial(k)) / Rational(z(nu)), k - nu.length()));
}

TEST(Jack, PowersumAndMonomialExpansionsAgree) {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& l : partitions_of(n))
      EXPECT_EQ(powersum_to_monomial(jack_powersum(l)), jack_monomial(l));
}

TEST(Ch, Examples) {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(ch(Partition{1}, l), UPoly(n));
  EXPECT_TRUE(ch(Partition{2}, Partition{2, 1}).eval(1) == 0);
  EXPECT_TRUE(ch(Partition{2}, Partition{}).is_zero());
  EXPECT_EQ(ch(Partition{2}, Partition{2}), (UPoly{0, 2}));
}

TEST(Ch, CharacterDefinitionAtAlphaOne) {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& l : partitions_of(n))
      for (int k = 1; k <= n; ++k)
        for (const Partition& mu : partitions_of(k)) {
          Rational expected = falling(n, k) * Rational(character(l, mu.with_parts(1, n - k))) /
                              Rational(character(l, ones(n)));
          EXPECT_EQ(ch(mu, l).eval(1), expected);
        }
}

TEST(Ko, Examples) {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& l : partitions_of(n)) EXPECT_EQ(ko(Partition{1}, l), UPoly(n));
  EXPECT_EQ(ko(Partition{2}, Partition{2}), (UPoly{1, 1}));
  EXPECT_EQ(ko(Partition{2}, Partition{2, 1}), (UPoly{2, 1}));
  EXPECT_TRUE(ko(Partition{2}, Partition{1, 1}).is_zero());
}

TEST(Ko, KostkaDefinitionAtAlphaOne) {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& l : partitions_of(n))
      for (int k = 1; k <= std::min(n, 4); ++k)
        for (const Partition& mu : partitions_of(k))
          EXPECT_EQ(ko(mu, l).eval(1),
                    falling(n, k) * Rational(kostka(l, mu.with_parts(1, n - k))) / Rational(syt_count(l)));
}

TEST(Ko, ExpandsOverCh) {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_of(k))
      for (const Partition& l : partitions_up_to(7)) {
        PolyAlpha s;
        for (const Partition& nu : partitions_of(k))
          s += ch(nu, l) * (Rational(L(nu, mu)) / Rational(z(nu)));
        EXPECT_EQ(ko(mu, l), s);
      }
}

TEST(ZonalSpherical, Examples) {
  for (int k = 1; k <= 5; ++k)
    for (const Partition& mu : partitions_of(k)) {
      EXPECT_EQ(zonal_spherical(mu, ones(k)), 1);
      EXPECT_EQ(zonal_spherical(Partition{k}, mu), 1);
    }
  EXPECT_THROW(zonal_spherical(Partition{2}, Partition{1}), SizeMismatch);
}

TEST(ZonalSpherical, Orthogonality) {
  for (int k = 1; k <= 3; ++k) {
    std::map<Partition, Integer> cls;
    for (const Permutation& s : all_permutations(2 * k)) cls[coset_type(s)] += 1;
    for (const Partition& a : partitions_of(k))
      for (const Partition& b : partitions_of(k)) {
        if (a == b) continue;
        Rational s = 0;
        for (const auto& [nu, c] : cls) s += Rational(c) * zonal_spherical(a, nu) * zonal_spherical(b, nu);
        EXPECT_EQ(s, 0);
      }
  }
}
