#include <algorithm>
#include <numeric>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"

namespace jackpos {

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition S;
  std::vector<int> remap;
  S.labels_.reserve(labels.size());
  for (int x : labels) {
    if (x < 0) throw InvalidArgument("negative block label");
    if (static_cast<std::size_t>(x) >= remap.size()) remap.resize(x + 1, -1);
    if (remap[x] < 0) remap[x] = S.nblocks_++;
    S.labels_.push_back(remap[x]);
  }
  return S;
}

SetPartition::SetPartition(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  std::vector<int> labels(n, -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw InvalidArgument("empty block");
    for (int x : blocks[j]) {
      if (x < 0 || x >= n || labels[x] >= 0) throw InvalidArgument("blocks do not partition the ground set");
      labels[x] = static_cast<int>(j);
    }
  }
  *this = from_labels(labels);
}

SetPartition SetPartition::singletons(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return from_labels(v);
}

SetPartition SetPartition::one_block(int k) { return from_labels(std::vector<int>(k, 0)); }

SetPartition SetPartition::intervals(const Partition& mu) {
  std::vector<int> v;
  int b = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) v.push_back(b);
    ++b;
  }
  return from_labels(v);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (int i = 0; i < ground_size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

Partition SetPartition::block_sizes() const {
  std::vector<int> sz(nblocks_, 0);
  for (int x : labels_) ++sz[x];
  return Partition(std::move(sz));
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.ground_size() != ground_size()) throw GroundSetMismatch("refines");
  std::vector<int> img(nblocks_, -1);
  for (int i = 0; i < ground_size(); ++i) {
    int& t = img[labels_[i]];
    if (t < 0) t = coarser.labels_[i];
    else if (t != coarser.labels_[i]) return false;
  }
  return true;
}

SetPartition SetPartition::act(const Permutation& s) const {
  if (s.size() != ground_size()) throw GroundSetMismatch("act");
  std::vector<int> v(labels_.size());
  for (int i = 0; i < ground_size(); ++i) v[s(i)] = labels_[i];
  return from_labels(v);
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& b : blocks()) {
    if (!first) s += ",";
    first = false;
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
    s += "}";
  }
  return s + "}";
}

SetPartition cycles(const Permutation& s) {
  std::vector<int> labels(s.size(), -1);
  int b = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (labels[i] >= 0) continue;
    for (int j = i; labels[j] < 0; j = s(j)) labels[j] = b;
    ++b;
  }
  return SetPartition::from_labels(labels);
}

namespace {
int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}
}  // namespace

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw GroundSetMismatch("join of different ground sets");
  const int n = a.ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> first_a(a.num_blocks(), -1), first_b(b.num_blocks(), -1);
  for (int i = 0; i < n; ++i) {
    int& fa = first_a[a.block_of(i)];
    if (fa < 0) fa = i;
    else parent[find(parent, i)] = find(parent, fa);
    int& fb = first_b[b.block_of(i)];
    if (fb < 0) fb = i;
    else parent[find(parent, i)] = find(parent, fb);
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = find(parent, i);
  return SetPartition::from_labels(labels);
}

PairPartition::PairPartition(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  if (n % 2) throw InvalidArgument("pair-partition of an odd set");
  for (int i = 0; i < n; ++i) {
    int j = partner_[i];
    if (j < 0 || j >= n || j == i || partner_[j] != i) throw InvalidArgument("not a perfect matching");
  }
}

PairPartition PairPartition::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> v(2 * pairs.size(), -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= static_cast<int>(v.size()) || b >= static_cast<int>(v.size()))
      throw InvalidArgument("pair element out of range");
    v[a] = b;
    v[b] = a;
  }
  return PairPartition(std::move(v));
}

PairPartition PairPartition::star(int k) {
  std::vector<int> v(2 * k);
  for (int i = 0; i < 2 * k; ++i) v[i] = i ^ 1;
  return PairPartition(std::move(v));
}

SetPartition PairPartition::as_set_partition() const {
  std::vector<int> labels(partner_.size());
  for (int i = 0; i < static_cast<int>(partner_.size()); ++i) labels[i] = std::min(i, partner_[i]);
  return SetPartition::from_labels(labels);
}

PairPartition PairPartition::act(const Permutation& s) const {
  if (s.size() != static_cast<int>(partner_.size())) throw GroundSetMismatch("act");
  std::vector<int> v(partner_.size());
  for (int i = 0; i < s.size(); ++i) v[s(i)] = s(partner_[i]);
  return PairPartition(std::move(v));
}

std::string PairPartition::to_string() const { return as_set_partition().to_string(); }

Partition type_of_pair(const PairPartition& a, const PairPartition& b) {
  if (a.k() != b.k()) throw GroundSetMismatch("pair-partitions of different sizes");
  auto sizes = join(a.as_set_partition(), b.as_set_partition()).block_sizes().parts();
  for (int& x : sizes) x /= 2;
  return Partition(std::move(sizes));
}

Partition coset_type(const Permutation& s) {
  if (s.size() % 2) throw InvalidArgument("coset type needs an even ground set");
  PairPartition star = PairPartition::star(s.size() / 2);
  return type_of_pair(star, star.act(s));
}

std::pair<PairPartition, PairPartition> canonical_pair_of_type(const Partition& mu) {
  std::vector<int> p2(2 * mu.size());
  int b = 0;
  for (int m : mu.parts()) {
    int len = 2 * m;
    // pairs {b+1,b+2}, {b+3,b+4}, ..., {b+len-1, b}: one cycle with the star pairs
    for (int i = 1; i < len; i += 2) {
      int x = b + i, y = b + (i + 1) % len;
      p2[x] = y;
      p2[y] = x;
    }
    b += len;
  }
  return {PairPartition::star(mu.size()), PairPartition(std::move(p2))};
}

const EnumerationLimits& default_limits() {
  static const EnumerationLimits lim;
  return lim;
}

namespace {
void check(int k, int limit, bool unbounded, const char* what) {
  if (k < 0) throw InvalidArgument("negative size");
  if (!unbounded && k > limit)
    throw LimitExceeded(std::string(what) + " of size " + std::to_string(k) + " above limit " +
                        std::to_string(limit));
}
}  // namespace

void for_each_permutation(int k, const std::function<void(const Permutation&)>& f,
                          const EnumerationLimits& lim) {
  check(k, lim.permutations, lim.unbounded, "permutations");
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int k, const EnumerationLimits& lim) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& s) { out.push_back(s); }, lim);
  return out;
}

std::vector<SetPartition> all_set_partitions(int k, const EnumerationLimits& lim) {
  check(k, lim.set_partitions, lim.unbounded, "set-partitions");
  std::vector<SetPartition> out;
  std::vector<int> rgs(k, 0);
  auto rec = [&](auto&& self, int i, int maxlabel) -> void {
    if (i == k) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (int b = 0; b <= maxlabel + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(maxlabel, b));
    }
  };
  if (k == 0) out.push_back(SetPartition::from_labels({}));
  else rec(rec, 1, 0);
  return out;
}

std::vector<PairPartition> all_pair_partitions(int k, const EnumerationLimits& lim) {
  check(k, lim.pair_partitions, lim.unbounded, "pair-partitions");
  std::vector<PairPartition> out;
  std::vector<int> partner(2 * k, -1);
  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < 2 * k && partner[i] >= 0) ++i;
    if (i == 2 * k) {
      out.emplace_back(partner);
      return;
    }
    for (int j = i + 1; j < 2 * k; ++j) {
      if (partner[j] >= 0) continue;
      partner[i] = j;
      partner[j] = i;
      self(self);
      partner[i] = partner[j] = -1;
    }
  };
  rec(rec);
  return out;
}

std::vector<Permutation> young_subgroup(const SetPartition& S) {
  auto blocks = S.blocks();
  std::vector<Permutation> out;
  std::vector<int> img(S.ground_size());
  std::vector<std::vector<int>> perms(blocks.size());
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      out.emplace_back(img);
      return;
    }
    std::vector<int> cur = blocks[b];
    do {
      for (std::size_t i = 0; i < cur.size(); ++i) img[blocks[b][i]] = cur[i];
      self(self, b + 1);
    } while (std::next_permutation(cur.begin(), cur.end()));
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jackpos
