#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackpos/upoly.hpp"

namespace jackpos {

struct Box {
  int row = 1;  // 1-based, top to bottom
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Accepts any order; zero parts are dropped, the rest sorted decreasingly.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int multiplicity(int j) const;
  Partition conjugate() const;
  bool has_box(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
  int arm(Box b) const { return part(b.row) - b.col; }
  int leg(Box b) const;
  std::vector<Box> boxes() const;
  // Append `count` parts equal to `value`.
  Partition with_parts(int value, int count) const;

  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition parse_partition(std::string_view text);  // "2,1", "" or "()" for empty
nlohmann::json to_json(const Partition& p);

// All partitions of n, in decreasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);
// Sizes 0..n, each in decreasing lexicographic order.
std::vector<Partition> partitions_up_to(int n);

struct MultiRect {
  std::vector<long> p;
  std::vector<long> r;
  int dim() const { return static_cast<int>(p.size()); }
  std::vector<long> q() const;
  friend bool operator==(const MultiRect&, const MultiRect&) = default;
};

nlohmann::json to_json(const MultiRect& m);
Partition to_partition(const MultiRect& m);
// Canonical inverse: leading zeros in p; throws TooManyBlocks.
MultiRect from_partition(const Partition& lambda, int d);
Partition dilate(const Partition& lambda, int s);

// H = prod (alpha a + l + 1), H' = prod (alpha a + l + alpha).
std::pair<PolyAlpha, PolyAlpha> hook_products(const Partition& lambda);

bool contains(const Partition& lambda, const Partition& mu);
// Both throw SizeMismatch on unequal sizes.
bool dominates(const Partition& lambda, const Partition& mu);
// True when the parts of lambda can be grouped to sum to the parts of mu.
bool refines(const Partition& lambda, const Partition& mu);

struct Orders {
  bool contains;
  bool dominates;
  bool refines;
};
Orders orders(const Partition& lambda, const Partition& mu);

Integer z(const Partition& mu);

}  // namespace jackpos
