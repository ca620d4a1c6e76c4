#include "jackpos/zonal.hpp"

#include "jackpos/errors.hpp"
#include "jackpos/jack.hpp"
#include "n_accumulator.hpp"

namespace jackpos {

using namespace detail;

namespace {

long long minus_two_pow(int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= -2;
  return v;
}

void check_k(const PairPartition& a, const PairPartition& b) {
  if (a.k() != b.k()) throw GroundSetMismatch("pair-partitions of different sizes");
}

const IntAcc& n2_acc(const PairPartition& S0, const PairPartition& S1, const PairPartition& S2, int d) {
  SetPartition s0 = S0.as_set_partition();
  return n_cached(join(s0, S2.as_set_partition()), join(s0, S1.as_set_partition()), d);
}

// sum over S0 of (-2)^{|join(S0,S1)|} N(S0,S1,S2)
IntAcc inner_sum(const std::vector<PairPartition>& all, const PairPartition& S1, const PairPartition& S2,
                 int d) {
  IntAcc acc;
  const SetPartition s1 = S1.as_set_partition();
  for (const PairPartition& S0 : all)
    add_into(acc, n2_acc(S0, S1, S2, d), minus_two_pow(join(S0.as_set_partition(), s1).num_blocks()));
  return acc;
}

}  // namespace

MultiPoly n2_poly(const PairPartition& S0, const PairPartition& S1, const PairPartition& S2, int d) {
  check_k(S0, S1);
  check_k(S0, S2);
  return to_multipoly(n2_acc(S0, S1, S2, d), d);
}

MultiPoly ch2_multirect(const Partition& mu, int d, const PairPartition& S1, const PairPartition& S2) {
  check_k(S1, S2);
  if (type_of_pair(S1, S2) != mu) throw InvalidArgument("pair does not have type " + mu.to_string());
  const int k = mu.size();
  IntAcc acc = inner_sum(all_pair_partitions(k), S1, S2, d);
  Rational scale = Rational(k % 2 ? -1 : 1, 1);
  scale /= Rational(Integer(1) << mu.length());
  MultiPoly out = to_multipoly(acc, d);
  return out * RatAlpha(scale);
}

MultiPoly ch2_multirect(const Partition& mu, int d) {
  auto [S1, S2] = canonical_pair_of_type(mu);
  return ch2_multirect(mu, d, S1, S2);
}

MultiPoly zstar_multirect(const Partition& mu, int d) {
  const int k = mu.size();
  auto all = all_pair_partitions(k);
  // bucket the (S1, S2) pairs by type, then weight each bucket by w^mu
  std::map<Partition, IntAcc> buckets;
  for (const PairPartition& S1 : all)
    for (const PairPartition& S2 : all) add_into(buckets[type_of_pair(S1, S2)], inner_sum(all, S1, S2, d), 1);
  MultiPoly out(d);
  for (const auto& [nu, acc] : buckets) {
    Rational w = zonal_spherical(mu, nu);
    if (w != 0) out += to_multipoly(acc, d) * RatAlpha(w);
  }
  Rational scale = Rational(factorial(static_cast<unsigned long>(k))) /
                   Rational(factorial(2 * static_cast<unsigned long>(k)));
  if (k % 2) scale = -scale;
  return out * RatAlpha(scale);
}

MultiPoly ko2_multirect(const Partition& mu, int d, const SetPartition& U) {
  const int k = mu.size();
  std::vector<int> doubled;
  for (int m : mu.parts()) doubled.push_back(2 * m);
  if (U.block_sizes() != Partition(doubled)) throw InvalidArgument("U must have block sizes 2*mu");
  auto all = all_pair_partitions(k);
  std::vector<PairPartition> inside;
  for (const PairPartition& S : all)
    if (S.as_set_partition().refines(U)) inside.push_back(S);
  IntAcc acc;
  for (const PairPartition& S1 : inside)
    for (const PairPartition& S2 : inside) add_into(acc, inner_sum(all, S1, S2, d), 1);
  Integer denom = 1;
  for (int m : doubled) denom *= factorial(static_cast<unsigned long>(m));
  Rational scale = Rational(k % 2 ? -1 : 1) / Rational(denom);
  return to_multipoly(acc, d) * RatAlpha(scale);
}

MultiPoly ko2_multirect(const Partition& mu, int d) {
  std::vector<int> doubled;
  for (int m : mu.parts()) doubled.push_back(2 * m);
  return ko2_multirect(mu, d, SetPartition::intervals(Partition(doubled)));
}

std::map<Partition, Integer> pair_type_census(int k) {
  auto all = all_pair_partitions(k);
  std::map<Partition, Integer> census;
  for (const auto& a : all)
    for (const auto& b : all) census[type_of_pair(a, b)] += 1;
  return census;
}

Integer pair_type_count(const Partition& nu) {
  Integer denom = z(nu) << nu.length();
  return factorial(2 * static_cast<unsigned long>(nu.size())) / denom;
}

}  // namespace jackpos
