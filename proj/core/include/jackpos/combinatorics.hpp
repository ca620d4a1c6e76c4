#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "jackpos/partition.hpp"

namespace jackpos {

class SetPartition;

// Bijection of {0..k-1}; printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images
  static Permutation identity(int k);
  static Permutation from_one_based(const std::vector<int>& images);
  // Consecutive cycles (1..mu_1)(mu_1+1..)... for a partition mu.
  static Permutation canonical(const Partition& mu);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  int num_cycles() const;
  int sign() const { return (size() - num_cycles()) % 2 ? -1 : 1; }
  Partition cycle_type() const;
  std::string to_string() const;  // cycle notation
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// Canonical form: blocks sorted by minimum, stored as a restricted growth
// string (label of each element, labels in order of first appearance).
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(const std::vector<std::vector<int>>& blocks);  // 0-based elements
  static SetPartition from_labels(const std::vector<int>& labels);
  static SetPartition singletons(int k);
  static SetPartition one_block(int k);
  // Consecutive intervals of sizes given by the parts of mu.
  static SetPartition intervals(const Partition& mu);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const { return nblocks_; }
  int block_of(int i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<std::vector<int>> blocks() const;
  Partition block_sizes() const;
  // Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;
  // Image under a permutation of the ground set.
  SetPartition act(const Permutation& s) const;
  std::string to_string() const;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<int> labels_;
  int nblocks_ = 0;
};

SetPartition cycles(const Permutation& s);
// Throws GroundSetMismatch.
SetPartition join(const SetPartition& a, const SetPartition& b);

// Perfect matching of {0..2k-1}.
class PairPartition {
 public:
  PairPartition() = default;
  explicit PairPartition(std::vector<int> partner);
  static PairPartition from_pairs(const std::vector<std::pair<int, int>>& pairs);  // 0-based
  // {{1,2},{3,4},...}
  static PairPartition star(int k);

  int k() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int i) const { return partner_[i]; }
  SetPartition as_set_partition() const;
  PairPartition act(const Permutation& s) const;
  std::string to_string() const;
  friend auto operator<=>(const PairPartition&, const PairPartition&) = default;
  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  std::vector<int> partner_;
};

Partition type_of_pair(const PairPartition& a, const PairPartition& b);
Partition coset_type(const Permutation& s);
// Pair-partition pair (star, S2) of type mu on consecutive blocks.
std::pair<PairPartition, PairPartition> canonical_pair_of_type(const Partition& mu);

struct EnumerationLimits {
  int permutations = 10;
  int set_partitions = 12;
  int pair_partitions = 7;
  bool unbounded = false;
};
const EnumerationLimits& default_limits();

// Lexicographic streams. Throw LimitExceeded above the limits.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& f,
                          const EnumerationLimits& lim = default_limits());
std::vector<Permutation> all_permutations(int k, const EnumerationLimits& lim = default_limits());
std::vector<SetPartition> all_set_partitions(int k, const EnumerationLimits& lim = default_limits());
std::vector<PairPartition> all_pair_partitions(int k, const EnumerationLimits& lim = default_limits());
// The Young subgroup S_S: permutations preserving every block of S.
std::vector<Permutation> young_subgroup(const SetPartition& S);

int lrmin(const std::vector<int>& word);

}  // namespace jackpos
