#include "n_accumulator.hpp"

#include <mutex>
#include <tuple>

namespace jackpos::detail {

void add_into(IntAcc& acc, const IntAcc& src, long long scale) {
  for (const auto& [e, c] : src) {
    long long& slot = acc[e];
    slot += scale * c;
    if (slot == 0) acc.erase(e);
  }
}

MultiPoly to_multipoly(const IntAcc& acc, int d, const Rational& divisor) {
  MultiPoly out(d);
  for (const auto& [e, c] : acc) out.add_term(e, RatAlpha(Rational(Integer(static_cast<long>(c))) / divisor));
  return out;
}

std::vector<std::vector<int>> meeting_blocks(const SetPartition& S, const SetPartition& T) {
  std::vector<std::vector<int>> meets(T.num_blocks());
  std::vector<std::vector<char>> seen(T.num_blocks(), std::vector<char>(S.num_blocks(), 0));
  for (int x = 0; x < S.ground_size(); ++x) {
    int i = S.block_of(x), j = T.block_of(x);
    if (!seen[j][i]) {
      seen[j][i] = 1;
      meets[j].push_back(i);
    }
  }
  return meets;
}

namespace {

// For every v, the admissible w(T_j) range over [max v on meeting blocks, d].
IntAcc n_acc(const SetPartition& S, const SetPartition& T, int d) {
  IntAcc acc;
  const int s = S.num_blocks(), t = T.num_blocks();
  auto meets = meeting_blocks(S, T);
  std::vector<int> v(s, 0), w(t, 0), lo(t, 0);
  Exponent e(2 * static_cast<std::size_t>(d), 0);
  auto emit_w = [&](auto&& self, int j) -> void {
    if (j == t) {
      ++acc[e];
      return;
    }
    for (int c = lo[j]; c < d; ++c) {
      ++e[d + c];
      self(self, j + 1);
      --e[d + c];
    }
  };
  auto emit_v = [&](auto&& self, int i) -> void {
    if (i == s) {
      for (int j = 0; j < t; ++j) {
        lo[j] = 0;
        for (int b : meets[j]) lo[j] = std::max(lo[j], v[b]);
      }
      emit_w(emit_w, 0);
      return;
    }
    for (int c = 0; c < d; ++c) {
      v[i] = c;
      ++e[c];
      self(self, i + 1);
      --e[c];
    }
  };
  emit_v(emit_v, 0);
  return acc;
}

std::mutex n_mu;
std::map<std::tuple<SetPartition, SetPartition, int>, IntAcc> n_memo;

}  // namespace

const IntAcc& n_cached(const SetPartition& S, const SetPartition& T, int d) {
  std::lock_guard lock(n_mu);
  auto key = std::make_tuple(S, T, d);
  auto it = n_memo.find(key);
  if (it == n_memo.end()) it = n_memo.emplace(key, n_acc(S, T, d)).first;
  return it->second;
}

}  // namespace jackpos::detail
