#include "jackpos/stanley.hpp"

#include <map>
#include <mutex>

#include "jackpos/errors.hpp"
#include "n_accumulator.hpp"
#include "jackpos/symfun.hpp"

namespace jackpos {

namespace {

using namespace detail;

void check_sizes(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw SizeMismatch("permutations of different sizes");
}

// Number of parts of `fine` inside each block of `coarse`.
std::vector<int> parts_per_block(const SetPartition& fine, const SetPartition& coarse) {
  std::vector<int> count(coarse.num_blocks(), 0);
  std::vector<char> seen(fine.num_blocks(), 0);
  for (int x = 0; x < fine.ground_size(); ++x) {
    int b = fine.block_of(x);
    if (!seen[b]) {
      seen[b] = 1;
      ++count[coarse.block_of(x)];
    }
  }
  return count;
}

std::vector<SetPartition> coarsenings(const SetPartition& P) {
  std::vector<SetPartition> out;
  for (const auto& S : all_set_partitions(P.ground_size()))
    if (P.refines(S)) out.push_back(S);
  return out;
}

// Ch^{(1)}_nu as an integer accumulator (before any division).
IntAcc ch1_acc(const Partition& mu, int d) {
  const int k = mu.size();
  Permutation pi = Permutation::canonical(mu);
  IntAcc acc;
  for_each_permutation(k, [&](const Permutation& sigma) {
    Permutation tau = sigma.inverse() * pi;
    add_into(acc, n_cached(cycles(sigma), cycles(tau), d), tau.sign());
  });
  return acc;
}

}  // namespace

MultiPoly n_poly(const Permutation& sigma, const Permutation& tau, int d) {
  check_sizes(sigma, tau);
  return to_multipoly(n_cached(cycles(sigma), cycles(tau), d), d);
}

MultiPoly n_poly_injective(const Permutation& sigma, const Permutation& tau, int d) {
  check_sizes(sigma, tau);
  const SetPartition Cs = cycles(sigma), Ct = cycles(tau);
  IntAcc acc;
  for (const SetPartition& S : coarsenings(Cs)) {
    if (S.num_blocks() > d) continue;
    auto xs = parts_per_block(Cs, S);
    for (const SetPartition& T : coarsenings(Ct)) {
      if (T.num_blocks() > d) continue;
      auto ys = parts_per_block(Ct, T);
      auto meets = meeting_blocks(S, T);
      std::vector<int> v(S.num_blocks()), w(T.num_blocks());
      std::vector<char> used_v(d, 0), used_w(d, 0);
      auto emit_w = [&](auto&& self, std::size_t j) -> void {
        if (j == w.size()) {
          Exponent e(2 * static_cast<std::size_t>(d), 0);
          for (std::size_t i = 0; i < v.size(); ++i) e[v[i]] += xs[i];
          for (std::size_t jj = 0; jj < w.size(); ++jj) e[d + w[jj]] += ys[jj];
          ++acc[e];
          return;
        }
        int lo = 0;
        for (int b : meets[j]) lo = std::max(lo, v[b]);
        for (int c = lo; c < d; ++c) {
          if (used_w[c]) continue;
          used_w[c] = 1;
          w[j] = c;
          self(self, j + 1);
          used_w[c] = 0;
        }
      };
      auto emit_v = [&](auto&& self, std::size_t i) -> void {
        if (i == v.size()) {
          emit_w(emit_w, 0);
          return;
        }
        for (int c = 0; c < d; ++c) {
          if (used_v[c]) continue;
          used_v[c] = 1;
          v[i] = c;
          self(self, i + 1);
          used_v[c] = 0;
        }
      };
      emit_v(emit_v, 0);
    }
  }
  return to_multipoly(acc, d);
}

MultiPoly ch1_multirect(const Partition& mu, int d) { return to_multipoly(ch1_acc(mu, d), d); }

MultiPoly shifted_schur_multirect(const Partition& mu, int d) {
  // S* = sum_nu chi^mu_nu / z_nu Ch_nu, the double sum grouped by the class of sigma tau
  const int k = mu.size();
  IntAcc acc;
  Integer denom = factorial(static_cast<unsigned long>(k));
  for (const Partition& nu : partitions_of(k)) {
    Integer chi = character(mu, nu);
    if (chi == 0) continue;
    Integer scale = chi * (denom / z(nu));
    add_into(acc, ch1_acc(nu, d), scale.get_si());
  }
  return to_multipoly(acc, d, Rational(denom));
}

MultiPoly shifted_schur_multirect_raw(const Partition& mu, int d) {
  const int k = mu.size();
  std::map<Partition, long long> chi;
  for (const Partition& nu : partitions_of(k)) chi[nu] = character(mu, nu).get_si();
  auto perms = all_permutations(k);
  std::vector<SetPartition> cyc;
  for (const auto& s : perms) cyc.push_back(cycles(s));
  IntAcc acc;
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      long long c = chi[(perms[a] * perms[b]).cycle_type()];
      if (c != 0) add_into(acc, n_cached(cyc[a], cyc[b], d), c * perms[b].sign());
    }
  return to_multipoly(acc, d, Rational(factorial(static_cast<unsigned long>(k))));
}

MultiPoly ko_multirect_sym(const Partition& mu, int d, const SetPartition& U) {
  if (U.block_sizes() != mu) throw InvalidArgument("U has block sizes " + U.block_sizes().to_string());
  const int k = mu.size();
  auto perms = all_permutations(k);
  IntAcc acc;
  // sigma tau = pi ranges over the Young subgroup of U
  for (const Permutation& pi : young_subgroup(U))
    for (const Permutation& sigma : perms) {
      Permutation tau = sigma.inverse() * pi;
      add_into(acc, n_cached(cycles(sigma), cycles(tau), d), tau.sign());
    }
  Integer denom = 1;
  for (int m : mu.parts()) denom *= factorial(static_cast<unsigned long>(m));
  return to_multipoly(acc, d, Rational(denom));
}

MultiPoly ko_multirect_sym(const Partition& mu, int d) {
  return ko_multirect_sym(mu, d, SetPartition::intervals(mu));
}

MultiPoly ch1_rectangle(const Partition& mu) {
  const int k = mu.size();
  Permutation pi = Permutation::canonical(mu);
  IntAcc acc;
  for (const Permutation& sigma : all_permutations(k)) {
    Permutation tau = sigma.inverse() * pi;
    Exponent e{static_cast<std::uint8_t>(sigma.num_cycles()), static_cast<std::uint8_t>(tau.num_cycles())};
    acc[e] += tau.sign();
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return to_multipoly(acc, 1);
}

namespace {

std::map<Partition, long long> character_table_row(const Partition& mu) {
  std::map<Partition, long long> chi;
  for (const Partition& nu : partitions_of(mu.size())) chi[nu] = character(mu, nu).get_si();
  return chi;
}

void check_ground(const Partition& mu, const SetPartition& S, const SetPartition& T) {
  if (S.ground_size() != mu.size() || T.ground_size() != mu.size())
    throw GroundSetMismatch("set-partitions must live on [" + std::to_string(mu.size()) + "]");
}

}  // namespace

MultiPoly a_poly(const Partition& mu, const SetPartition& S, const SetPartition& T) {
  check_ground(mu, S, T);
  const int D = std::max(S.num_blocks(), T.num_blocks());
  auto chi = character_table_row(mu);
  auto YS = young_subgroup(S), YT = young_subgroup(T);
  IntAcc acc;
  for (const Permutation& sigma : YS) {
    auto xs = parts_per_block(cycles(sigma), S);
    for (const Permutation& tau : YT) {
      long long c = chi[(sigma * tau).cycle_type()];
      if (c == 0) continue;
      auto ys = parts_per_block(cycles(tau), T);
      Exponent e(2 * static_cast<std::size_t>(D), 0);
      for (std::size_t i = 0; i < xs.size(); ++i) e[i] = static_cast<std::uint8_t>(xs[i]);
      for (std::size_t j = 0; j < ys.size(); ++j) e[D + j] = static_cast<std::uint8_t>(ys[j]);
      acc[e] += c * tau.sign();
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return to_multipoly(acc, D);
}

Integer b_coeff(const Partition& mu, const SetPartition& S, const SetPartition& T) {
  check_ground(mu, S, T);
  auto chi = character_table_row(mu);
  auto YT = young_subgroup(T);
  long long acc = 0;
  for (const Permutation& sigma : young_subgroup(S))
    for (const Permutation& tau : YT) acc += chi[(sigma * tau).cycle_type()] * tau.sign();
  return Integer(static_cast<long>(acc));
}

FFExpansion a_poly_ff(const Partition& mu, const SetPartition& S, const SetPartition& T) {
  check_ground(mu, S, T);
  const int D = std::max(S.num_blocks(), T.num_blocks());
  FFExpansion out(D);
  std::vector<SetPartition> finer_S, finer_T;
  for (const auto& P : all_set_partitions(mu.size())) {
    if (P.refines(S)) finer_S.push_back(P);
    if (P.refines(T)) finer_T.push_back(P);
  }
  for (const auto& Sf : finer_S) {
    auto xs = parts_per_block(Sf, S);
    for (const auto& Tf : finer_T) {
      Integer B = b_coeff(mu, Sf, Tf);
      if (B == 0) continue;
      auto ys = parts_per_block(Tf, T);
      FFKey key{0, Exponent(2 * static_cast<std::size_t>(D), 0)};
      for (std::size_t i = 0; i < xs.size(); ++i) key.e[i] = static_cast<std::uint8_t>(xs[i]);
      for (std::size_t j = 0; j < ys.size(); ++j) key.e[D + j] = static_cast<std::uint8_t>(ys[j]);
      out.add(key, Rational(B));
    }
  }
  return out;
}

Integer question_bad_sum(const SetPartition& S, const SetPartition& T, const SetPartition& U) {
  if (S.ground_size() != T.ground_size() || S.ground_size() != U.ground_size())
    throw GroundSetMismatch("set-partitions on different ground sets");
  auto YT = young_subgroup(T);
  long long acc = 0;
  for (const Permutation& sigma : young_subgroup(S))
    for (const Permutation& tau : YT)
      if (cycles(sigma * tau).refines(U)) acc += tau.sign();
  return Integer(static_cast<long>(acc));
}

MultiPoly shifted_schur_via_a(const Partition& mu, int d) {
  const int k = mu.size();
  auto parts = all_set_partitions(k);
  MultiPoly total(d);
  for (const auto& S : parts) {
    if (S.num_blocks() > d) continue;
    for (const auto& T : parts) {
      if (T.num_blocks() > d) continue;
      MultiPoly A = a_poly(mu, S, T);
      const int D = A.dim();
      auto meets = meeting_blocks(S, T);
      std::vector<int> v(S.num_blocks()), w(T.num_blocks());
      std::vector<char> used_v(d, 0), used_w(d, 0);
      auto emit_w = [&](auto&& self, std::size_t j) -> void {
        if (j == w.size()) {
          std::vector<MultiPoly> images(2 * static_cast<std::size_t>(D), MultiPoly(d));
          for (std::size_t i = 0; i < v.size(); ++i) images[i] = MultiPoly::p(d, v[i] + 1);
          for (std::size_t jj = 0; jj < w.size(); ++jj) images[D + jj] = MultiPoly::r(d, w[jj] + 1);
          total += A.substitute(images);
          return;
        }
        int lo = 0;
        for (int b : meets[j]) lo = std::max(lo, v[b]);
        for (int c = lo; c < d; ++c) {
          if (used_w[c]) continue;
          used_w[c] = 1;
          w[j] = c;
          self(self, j + 1);
          used_w[c] = 0;
        }
      };
      auto emit_v = [&](auto&& self, std::size_t i) -> void {
        if (i == v.size()) {
          emit_w(emit_w, 0);
          return;
        }
        for (int c = 0; c < d; ++c) {
          if (used_v[c]) continue;
          used_v[c] = 1;
          v[i] = c;
          self(self, i + 1);
          used_v[c] = 0;
        }
      };
      emit_v(emit_v, 0);
    }
  }
  return total * RatAlpha(Rational(1) / Rational(factorial(static_cast<unsigned long>(k))));
}

MultiPoly to_p_minus_q(const MultiPoly& P, int sign_power) {
  const int d = P.dim();
  // r_i = q_i - q_{i+1}, then q -> -q
  std::vector<MultiPoly> images;
  for (int i = 1; i <= d; ++i) images.push_back(MultiPoly::p(d, i));
  for (int i = 1; i <= d; ++i) {
    MultiPoly img = -MultiPoly::r(d, i);
    if (i < d) img += MultiPoly::r(d, i + 1);
    images.push_back(img);
  }
  MultiPoly out = P.substitute(images);
  if (sign_power % 2) out = -out;
  return out;
}

bool nonnegative_coefficients(const MultiPoly& P) {
  for (const auto& [e, c] : P.terms()) {
    if (!c.is_polynomial() || !c.num().nonnegative_coeffs()) return false;
  }
  return true;
}

}  // namespace jackpos
