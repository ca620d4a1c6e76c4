#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jackpos/falling_factorial.hpp"
#include "jackpos/partition.hpp"

namespace jackpos {

struct Arrow {
  enum class Kind { none, right, down };
  Kind kind = Kind::none;
  int offset = 0;  // right: steps to the right (0 = the box itself); down: steps below
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct HookTableau {
  Partition shape;
  std::map<Box, Arrow> marks;

  // Distinct columns, no mark strictly below-right of another in the next
  // column, arrows only on critical boxes and inside the shape.
  bool is_valid() const;
  // Right box of each pair of horizontally adjacent marks.
  std::vector<Box> critical_boxes() const;
  // alpha^{number of right arrows}
  PolyAlpha weight() const;
  std::string to_string() const;
  friend bool operator==(const HookTableau&, const HookTableau&) = default;
};

struct PermutedTableau {
  Partition shape;
  std::map<Box, int> labels;

  // Distinct columns; each row's labels read left to right form a permutation.
  bool is_valid() const;
  std::vector<int> row_word(int row) const;
  // prod over rows of alpha^{j - lrmin}
  PolyAlpha weight() const;
  std::string to_string() const;
  friend bool operator==(const PermutedTableau&, const PermutedTableau&) = default;
};

// Rows separated by '/', cells by ','. A cell is '.', '*' or a label,
// optionally followed by ^t (right arrow) or _t (down arrow).
HookTableau parse_hook_tableau(std::string_view text);
PermutedTableau parse_permuted_tableau(std::string_view text);

struct TraceStep {
  std::string rule;
  std::string state;
};

PermutedTableau psi(const HookTableau& T, std::vector<TraceStep>* trace = nullptr);
HookTableau phi(const PermutedTableau& T, std::vector<TraceStep>* trace = nullptr);

void for_each_hook_tableau(const Partition& lambda, int k, const std::function<void(const HookTableau&)>& f);
void for_each_permuted_tableau(const Partition& lambda, int k,
                               const std::function<void(const PermutedTableau&)>& f);

enum class TableauFamily { hook, permuted };
PolyAlpha ko_onepart_tableaux(int k, const Partition& lambda, TableauFamily family);
// Sum over column-distinct k-subsets A of prod_rows P_{|R cap A|}(alpha).
PolyAlpha ko_onepart_subsets(int k, const Partition& lambda);
// P_i(alpha) = prod_{j<i} (1 + j alpha)
PolyAlpha p_weight(int i);
// Ko_(k)(r^p) emitted skeleton by skeleton in the alpha falling factorial basis.
FFExpansion ko_onepart_ff(int k, int d);

}  // namespace jackpos
