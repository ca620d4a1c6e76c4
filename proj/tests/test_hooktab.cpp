#include <gtest/gtest.h>

#include <set>

#include "jackpos/errors.hpp"
#include "jackpos/hooktab.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/shifted.hpp"
#include "jackpos/stanley.hpp"

using namespace jackpos;

namespace {

const char* kHookExample = "*,.,.,.,.,*,*^2,*^1,*_1/.,*,*^4,*_2,.,.,.,.,./.,.,.,.,.,.,./.,.,.,.,.";
const char* kPermutedExample = "2,.,.,.,.,1,.,.,./.,4,1,.,.,.,5,2,3/.,.,.,.,.,.,./.,.,.,1,.";
const char* kInverseInput = ".,2,.,.,.,.,.,.,3,.,1/2,.,.,1,.,.,.,3,.,4,./.,.,2,.,3,.,1";
const char* kInverseOutput = ".,.,.,.,.,.,.,.,*,*^0,*/*,*^8,*^2,*^4,*_1,.,.,*,.,.,./.,.,.,.,.,.,*";

// Column-distinct subsets by plain recursion over boxes.
PolyAlpha brute_subsets(int k, const Partition& l) {
  std::vector<Box> boxes = l.boxes();
  std::vector<int> per_row(l.length() + 1, 0);
  std::set<int> cols;
  PolyAlpha total;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      PolyAlpha w = 1;
      for (int c : per_row)
        for (int j = 1; j < c; ++j) w *= UPoly{1, j};
      total += w;
      return;
    }
    if (i == boxes.size()) return;
    rec(i + 1, left);
    const Box& b = boxes[i];
    if (cols.count(b.col)) return;
    cols.insert(b.col);
    ++per_row[b.row];
    rec(i + 1, left - 1);
    --per_row[b.row];
    cols.erase(b.col);
  };
  rec(0, k);
  return total;
}

}  // namespace

TEST(HookTableau, ParseAndPrint) {
  HookTableau T = parse_hook_tableau(kHookExample);
  EXPECT_EQ(T.shape, (Partition{9, 9, 7, 5}));
  EXPECT_EQ(T.marks.size(), 8U);
  EXPECT_EQ(T.to_string(), kHookExample);
  EXPECT_EQ(T.weight(), UPoly::monomial(1, 3));
  EXPECT_EQ(parse_hook_tableau("").shape, Partition{});
  EXPECT_THROW(parse_hook_tableau("*,x"), InvalidArgument);
}

TEST(HookTableau, Validity) {
  EXPECT_TRUE(parse_hook_tableau("*,*^0").is_valid());
  EXPECT_TRUE(parse_hook_tableau("*,*").is_valid());
  EXPECT_FALSE(parse_hook_tableau("*,./*,.").is_valid());   // same column
  EXPECT_FALSE(parse_hook_tableau("*,./.,*").is_valid());   // down-right in the next column
  EXPECT_TRUE(parse_hook_tableau(".,*/*,.").is_valid());
  EXPECT_FALSE(parse_hook_tableau("*^0,.").is_valid());     // arrow on a non-critical box
  EXPECT_FALSE(parse_hook_tableau("*,*^1").is_valid());     // points outside the shape
  // the worked example has marks at (1,1) and (2,2)
  EXPECT_FALSE(parse_hook_tableau(kHookExample).is_valid());
}

TEST(PermutedTableau, WeightAndValidity) {
  PermutedTableau P = parse_permuted_tableau(kPermutedExample);
  EXPECT_TRUE(P.is_valid());
  EXPECT_EQ(P.weight(), UPoly::monomial(1, 3));
  EXPECT_EQ(P.row_word(2), (std::vector<int>{4, 1, 5, 2, 3}));
  EXPECT_EQ(parse_permuted_tableau("1/1/1").weight(), UPoly(1));
  EXPECT_EQ(parse_permuted_tableau("1,2,3,4").weight(), UPoly::monomial(1, 3));
  EXPECT_FALSE(parse_permuted_tableau("1,3").is_valid());
  EXPECT_FALSE(parse_permuted_tableau("1/1").is_valid());
  EXPECT_EQ(P.to_string(), kPermutedExample);
}

TEST(Psi, WorkedExample) {
  std::vector<TraceStep> trace;
  PermutedTableau P = psi(parse_hook_tableau(kHookExample), &trace);
  EXPECT_EQ(P.to_string(), kPermutedExample);
  EXPECT_EQ(trace.front().rule, "start");
  std::set<std::string> rules;
  for (const auto& s : trace) rules.insert(s.rule);
  for (const char* r : {"N", "D", "Ra", "Rb"}) EXPECT_TRUE(rules.count(r)) << r;
}

TEST(Psi, SmallCases) {
  EXPECT_EQ(psi(parse_hook_tableau(".,./.,*")).to_string(), ".,./.,1");
  EXPECT_EQ(psi(parse_hook_tableau("*,*")).to_string(), "2,1");
  EXPECT_EQ(psi(parse_hook_tableau("*,*^0")).to_string(), "1,2");
}

TEST(Phi, WorkedExample) {
  std::vector<TraceStep> trace;
  PermutedTableau Q = parse_permuted_tableau(kInverseInput);
  HookTableau H = phi(Q, &trace);
  EXPECT_EQ(H.to_string(), kInverseOutput);
  EXPECT_TRUE(H.is_valid());
  EXPECT_EQ(psi(H), Q);
  std::set<std::string> rules;
  for (const auto& s : trace) rules.insert(s.rule);
  for (const char* r : {"M", "A", "Bm", "Bn"}) EXPECT_TRUE(rules.count(r)) << r;
  EXPECT_EQ(phi(parse_permuted_tableau("2,1")), parse_hook_tableau("*,*"));
}

TEST(Bijection, RoundTripUpToFive) {
  for (const Partition& l : partitions_up_to(5))
    for (int k = 1; k <= std::min(3, l.size()); ++k) {
      std::set<std::string> images;
      long n = 0;
      for_each_hook_tableau(l, k, [&](const HookTableau& T) {
        EXPECT_TRUE(T.is_valid());
        PermutedTableau P = psi(T);
        EXPECT_TRUE(P.is_valid());
        EXPECT_EQ(P.weight(), T.weight());
        EXPECT_EQ(phi(P), T);
        images.insert(P.to_string());
        ++n;
      });
      long m = 0;
      for_each_permuted_tableau(l, k, [&](const PermutedTableau& P) {
        EXPECT_TRUE(P.is_valid());
        EXPECT_EQ(psi(phi(P)), P);
        EXPECT_TRUE(images.count(P.to_string()));
        ++m;
      });
      EXPECT_EQ(static_cast<long>(images.size()), n);
      EXPECT_EQ(m, n);
    }
}

TEST(KoOnePart, Examples) {
  for (const Partition& l : partitions_up_to(5)) {
    if (l.empty()) continue;
    EXPECT_EQ(ko_onepart_tableaux(1, l, TableauFamily::hook), UPoly(l.size()));
    EXPECT_EQ(ko_onepart_tableaux(1, l, TableauFamily::permuted), UPoly(l.size()));
  }
  EXPECT_EQ(ko_onepart_tableaux(2, Partition{2}, TableauFamily::hook), (UPoly{1, 1}));
  EXPECT_TRUE(ko_onepart_tableaux(2, Partition{1, 1}, TableauFamily::permuted).is_zero());
  EXPECT_EQ(p_weight(0), UPoly(1));
  EXPECT_EQ(p_weight(1), UPoly(1));
  EXPECT_EQ(p_weight(2), (UPoly{1, 1}));
  EXPECT_EQ(p_weight(3), (UPoly{1, 1}) * (UPoly{1, 2}));
  EXPECT_EQ(ko_onepart_subsets(2, Partition{2, 1}), (UPoly{2, 1}));
}

TEST(KoOnePart, FourWayAgreement) {
  for (const Partition& l : partitions_up_to(7))
    for (int k = 1; k <= l.size(); ++k) {
      PolyAlpha j = ko(Partition{k}, l);
      EXPECT_EQ(ko_onepart_subsets(k, l), j);
      if (l.size() <= 6) EXPECT_EQ(brute_subsets(k, l), j);
      if (k <= 4 && l.size() <= 6) {
        EXPECT_EQ(ko_onepart_tableaux(k, l, TableauFamily::hook), j);
        EXPECT_EQ(ko_onepart_tableaux(k, l, TableauFamily::permuted), j);
      }
    }
}

TEST(KoOnePartFF, Examples) {
  FFExpansion f = ko_onepart_ff(1, 1);
  ASSERT_EQ(f.terms().size(), 1U);
  EXPECT_EQ(f.coeff({0, {1, 1}}), 1);
  FFExpansion g = ko_onepart_ff(2, 1);
  ASSERT_EQ(g.terms().size(), 3U);
  EXPECT_EQ(g.coeff({0, {1, 2}}), Rational(1, 2));
  EXPECT_EQ(g.coeff({1, {1, 2}}), Rational(1, 2));
  EXPECT_EQ(g.coeff({0, {2, 2}}), Rational(1, 2));
}

TEST(KoOnePartFF, SkeletonCompleteness) {
  for (int k = 1; k <= 5; ++k)
    for (int d = 1; d <= 2; ++d) {
      FFExpansion f = ko_onepart_ff(k, d);
      EXPECT_TRUE(is_nonnegative(f).pass);
      MultiPoly P = from_falling_factorial(f);
      EXPECT_EQ(P, reconstruct_multirect(ko_function(Partition{k}), k, d));
      EXPECT_EQ(P.specialize_alpha(1), ko_multirect_sym(Partition{k}, d));
    }
}

TEST(KoOnePartFF, ShiftedJackOnePart) {
  for (int k = 1; k <= 4; ++k)
    for (int d = 1; d <= 2; ++d)
      EXPECT_EQ(reconstruct_multirect(shifted_jack_function(Partition{k}), k, d),
                reconstruct_multirect(ko_function(Partition{k}), k, d) * RatAlpha(Rational(factorial(k))));
}
