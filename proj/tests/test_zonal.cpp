#include <gtest/gtest.h>

#include <random>

#include "jackpos/errors.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/shifted.hpp"
#include "jackpos/zonal.hpp"

using namespace jackpos;

namespace {

MultiPoly size_poly(int d) {
  MultiPoly out(d);
  for (int s = 1; s <= d; ++s)
    for (int t = s; t <= d; ++t) out += MultiPoly::p(d, s) * MultiPoly::r(d, t);
  return out;
}

Permutation random_perm(std::mt19937& g, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), g);
  return Permutation(v);
}

}  // namespace

TEST(N2Poly, Examples) {
  PairPartition s = PairPartition::star(1);
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(n2_poly(s, s, s, d), size_poly(d));
  MultiPoly p = MultiPoly::p(1, 1), r = MultiPoly::r(1, 1);
  auto all = all_pair_partitions(3);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
      EXPECT_EQ(n2_poly(a, b, c, 1),
                p.pow(join(a.as_set_partition(), c.as_set_partition()).num_blocks()) *
                    r.pow(join(a.as_set_partition(), b.as_set_partition()).num_blocks()));
}

TEST(N2Poly, SimultaneousActionInvariance) {
  std::mt19937 g(43);
  auto all = all_pair_partitions(3);
  for (int t = 0; t < 20; ++t) {
    const auto& a = all[g() % all.size()];
    const auto& b = all[g() % all.size()];
    const auto& c = all[g() % all.size()];
    Permutation s = random_perm(g, 6);
    EXPECT_EQ(n2_poly(a.act(s), b.act(s), c.act(s), 2), n2_poly(a, b, c, 2));
  }
}

TEST(Ch2, ExamplesAndReconstruction) {
  EXPECT_EQ(ch2_multirect(Partition{1}, 2), size_poly(2));
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_of(k))
      for (int d = 1; d <= 2; ++d)
        EXPECT_EQ(ch2_multirect(mu, d), reconstruct_multirect(ch_function(mu), k, d, Rational(2)));
}

TEST(Ch2, IndependentOfRepresentativePair) {
  std::mt19937 g(47);
  for (const Partition& mu : {Partition{2}, Partition{2, 1}, Partition{3}}) {
    MultiPoly base = ch2_multirect(mu, 2);
    auto [a, b] = canonical_pair_of_type(mu);
    for (int t = 0; t < 3; ++t) {
      Permutation s = random_perm(g, 2 * mu.size());
      EXPECT_EQ(ch2_multirect(mu, 2, a.act(s), b.act(s)), base);
    }
  }
  auto [a, b] = canonical_pair_of_type(Partition{2});
  EXPECT_THROW(ch2_multirect(Partition{1, 1}, 1, a, b), InvalidArgument);
}

TEST(ZStar, ExamplesAndReconstruction) {
  EXPECT_EQ(zstar_multirect(Partition{1}, 2), size_poly(2));
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_of(k)) {
      for (int d = 1; d <= 2; ++d)
        EXPECT_EQ(zstar_multirect(mu, d), reconstruct_multirect(shifted_jack_function(mu), k, d, Rational(2)));
      Rational at_one_box = zstar_multirect(mu, 1).eval({1}, {1}, 2);
      EXPECT_EQ(at_one_box, mu == Partition{1} ? Rational(1) : Rational(0));
    }
}

TEST(Ko2, ExamplesAndReconstruction) {
  EXPECT_EQ(ko2_multirect(Partition{1}, 2), size_poly(2));
  EXPECT_EQ(ko2_multirect(Partition{2}, 1).eval({1}, {2}, 2), 3);
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_of(k))
      for (int d = 1; d <= 2; ++d)
        EXPECT_EQ(ko2_multirect(mu, d), reconstruct_multirect(ko_function(mu), k, d, Rational(2)));
}

TEST(Ko2, IndependentOfU) {
  std::mt19937 g(53);
  for (const Partition& mu : {Partition{2, 1}, Partition{1, 1, 1}}) {
    MultiPoly base = ko2_multirect(mu, 2);
    Partition twice;
    {
      std::vector<int> v;
      for (int x : mu.parts()) v.push_back(2 * x);
      twice = Partition(v);
    }
    for (int t = 0; t < 3; ++t) {
      SetPartition U = SetPartition::intervals(twice).act(random_perm(g, 2 * mu.size()));
      EXPECT_EQ(ko2_multirect(mu, 2, U), base);
    }
  }
}

TEST(PairCensus, MatchesClosedForm) {
  for (int k = 1; k <= 4; ++k) {
    auto census = pair_type_census(k);
    Integer total = 0;
    for (const Partition& nu : partitions_of(k)) {
      EXPECT_EQ(census[nu], pair_type_count(nu));
      EXPECT_EQ(pair_type_count(nu), factorial(2 * k) / (z(nu) * (Integer(1) << nu.length())));
      total += census[nu];
    }
    Integer pp = all_pair_partitions(k).size();
    EXPECT_EQ(total, pp * pp);
  }
}
