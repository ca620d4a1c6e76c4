#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"

using namespace jackpos;

namespace {

// Orbits by direct iteration, as sorted cycle lengths.
Partition orbit_lengths(const Permutation& s) {
  std::vector<int> seen(s.size(), 0), lens;
  for (int i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = s(j)) seen[j] = 1, ++len;
    lens.push_back(len);
  }
  return Partition(lens);
}

Permutation random_perm(std::mt19937& g, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), g);
  return Permutation(v);
}

long bell(int n) {
  std::vector<std::vector<long>> t(n + 1);
  t[0] = {1};
  for (int i = 1; i <= n; ++i) {
    t[i] = {t[i - 1].back()};
    for (long x : t[i - 1]) t[i].push_back(t[i].back() + x);
  }
  return t[n][0];
}

}  // namespace

TEST(Permutation, BasicsAndCycles) {
  Permutation id = Permutation::identity(3);
  EXPECT_EQ(cycles(id), SetPartition::singletons(3));
  Permutation t = Permutation::from_one_based({2, 1, 3});
  EXPECT_EQ(cycles(t), SetPartition({{0, 1}, {2}}));
  EXPECT_EQ(t.sign(), -1);
  EXPECT_EQ(t.to_string(), "(1 2)(3)");
  EXPECT_EQ(Permutation::canonical(Partition{2, 1}).cycle_type(), (Partition{2, 1}));
  for (const Permutation& s : all_permutations(4)) {
    EXPECT_EQ(cycles(s).block_sizes(), orbit_lengths(s));
    EXPECT_EQ(s.cycle_type(), orbit_lengths(s));
    EXPECT_EQ(s * s.inverse(), Permutation::identity(4));
  }
}

TEST(Permutation, Composition) {
  Permutation a = Permutation::from_one_based({2, 3, 1}), b = Permutation::from_one_based({2, 1, 3});
  Permutation ab = a * b;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(ab(i), a(b(i)));
}

TEST(SetPartition, JoinExamplesAndLattice) {
  SetPartition s({{0, 1}, {2, 3}, {4, 5}}), t({{0, 2}, {1, 3}, {4, 5}});
  EXPECT_EQ(join(s, t), SetPartition({{0, 1, 2, 3}, {4, 5}}));
  EXPECT_EQ(join(s, s), s);
  EXPECT_EQ(join(s, SetPartition::singletons(6)), s);
  EXPECT_THROW(join(s, SetPartition::singletons(5)), GroundSetMismatch);
  for (int k = 1; k <= 4; ++k) {
    auto all = all_set_partitions(k);
    for (const auto& a : all)
      for (const auto& b : all) {
        SetPartition j = join(a, b);
        EXPECT_EQ(j, join(b, a));
        EXPECT_TRUE(a.refines(j));
        EXPECT_TRUE(b.refines(j));
        // least upper bound
        for (const auto& c : all)
          if (a.refines(c) && b.refines(c)) EXPECT_TRUE(j.refines(c));
        if (a.refines(b) && b.refines(a)) EXPECT_EQ(a, b);
        for (const auto& c : all) EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
      }
  }
}

TEST(SetPartition, CanonicalForm) {
  SetPartition a({{2, 0}, {1}}), b({{1}, {0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.labels(), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(SetPartition::intervals(Partition{2, 1}), SetPartition({{0, 1}, {2}}));
}

TEST(SetPartition, CyclesOfProductRefineJoin) {
  for (int k = 1; k <= 5; ++k) {
    auto perms = all_permutations(k);
    for (const auto& s : perms)
      for (const auto& t : perms) EXPECT_TRUE(cycles(s * t).refines(join(cycles(s), cycles(t))));
  }
}

TEST(PairPartition, TypeExamples) {
  PairPartition star = PairPartition::star(3);
  EXPECT_EQ(type_of_pair(star, star), (Partition{1, 1, 1}));
  PairPartition s2 = PairPartition::from_pairs({{0, 2}, {1, 3}, {4, 5}});
  EXPECT_EQ(type_of_pair(star, s2), (Partition{2, 1}));
  std::mt19937 g(3);
  auto all = all_pair_partitions(3);
  for (int t = 0; t < 200; ++t) {
    const auto& a = all[g() % all.size()];
    const auto& b = all[g() % all.size()];
    Permutation s = random_perm(g, 6);
    EXPECT_EQ(type_of_pair(a.act(s), b.act(s)), type_of_pair(a, b));
  }
}

TEST(PairPartition, CanonicalPairHasRequestedType) {
  for (int k = 1; k <= 5; ++k)
    for (const Partition& m : partitions_of(k)) {
      auto [a, b] = canonical_pair_of_type(m);
      EXPECT_EQ(type_of_pair(a, b), m);
    }
}

TEST(CosetType, Examples) {
  EXPECT_EQ(coset_type(Permutation::identity(4)), (Partition{1, 1}));
  EXPECT_EQ(coset_type(Permutation::from_one_based({1, 3, 2, 4})), (Partition{2}));
  int hyper = 0;
  for (const auto& s : all_permutations(4)) hyper += coset_type(s) == Partition{1, 1};
  EXPECT_EQ(hyper, 8);
  for (int k = 1; k <= 3; ++k) {
    long total = 0;
    std::set<Partition> seen;
    for (const auto& s : all_permutations(2 * k)) {
      seen.insert(coset_type(s));
      ++total;
    }
    EXPECT_EQ(Integer(total), factorial(2 * k));
    EXPECT_EQ(seen.size(), partitions_of(k).size());
  }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(all_pair_partitions(3).size(), 15U);
  EXPECT_EQ(all_set_partitions(3).size(), 5U);
  EXPECT_EQ(all_permutations(0).size(), 1U);
  for (int k = 0; k <= 7; ++k) {
    auto sp = all_set_partitions(k);
    EXPECT_EQ(static_cast<long>(sp.size()), bell(k));
    EXPECT_EQ(std::set<SetPartition>(sp.begin(), sp.end()).size(), sp.size());
    EXPECT_TRUE(std::is_sorted(sp.begin(), sp.end()));
  }
  for (int k = 0; k <= 5; ++k) {
    auto pp = all_pair_partitions(k);
    long dfact = 1;
    for (int i = 2 * k - 1; i > 0; i -= 2) dfact *= i;
    EXPECT_EQ(static_cast<long>(pp.size()), dfact);
    EXPECT_EQ(std::set<PairPartition>(pp.begin(), pp.end()).size(), pp.size());
  }
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(Integer(all_permutations(k).size()), factorial(k));
}

TEST(Enumeration, Limits) {
  EXPECT_THROW(all_permutations(11), LimitExceeded);
  EXPECT_THROW(all_set_partitions(13), LimitExceeded);
  EXPECT_THROW(all_pair_partitions(8), LimitExceeded);
  EnumerationLimits lim;
  lim.unbounded = true;
  long n = 0;
  for_each_permutation(2, [&](const Permutation&) { ++n; }, lim);
  EXPECT_EQ(n, 2);
}

TEST(YoungSubgroup, SizeIsProductOfFactorials) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& S : all_set_partitions(k)) {
      Integer expected = 1;
      Partition sizes = S.block_sizes();
      for (int b : sizes.parts()) expected *= factorial(b);
      auto G = young_subgroup(S);
      EXPECT_EQ(Integer(G.size()), expected);
      for (const auto& g : G) EXPECT_TRUE(cycles(g).refines(S));
    }
}

TEST(Lrmin, ExamplesAndGeneratingPolynomial) {
  EXPECT_EQ(lrmin({4, 2, 5, 1, 3}), 3);
  EXPECT_EQ(lrmin({1, 2, 3, 4}), 1);
  EXPECT_EQ(lrmin({4, 3, 2, 1}), 4);
  for (int j = 1; j <= 7; ++j) {
    // coefficients of t(t+1)...(t+j-1) are unsigned Stirling numbers of the first kind
    std::vector<Integer> rising{0, 1};
    for (int m = 1; m < j; ++m) {
      std::vector<Integer> nxt(rising.size() + 1, 0);
      for (std::size_t i = 0; i < rising.size(); ++i) {
        nxt[i + 1] += rising[i];
        nxt[i] += rising[i] * m;
      }
      rising = nxt;
    }
    std::vector<Integer> counts(j + 2, 0);
    for (const auto& s : all_permutations(j)) {
      std::vector<int> w(s.images());
      counts[lrmin(w)] += 1;
    }
    for (int i = 0; i <= j; ++i) EXPECT_EQ(counts[i], rising[i]) << j << " " << i;
  }
}
