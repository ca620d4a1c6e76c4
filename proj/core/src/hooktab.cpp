#include "jackpos/hooktab.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"

namespace jackpos {

namespace {

struct Cell {
  int label = 0;  // 0: unlabeled
  Arrow arrow;
};
using State = std::map<Box, Cell>;

std::string arrow_suffix(const Arrow& a) {
  switch (a.kind) {
    case Arrow::Kind::right: return "^" + std::to_string(a.offset);
    case Arrow::Kind::down: return "_" + std::to_string(a.offset);
    default: return "";
  }
}

std::string render(const Partition& shape, const State& s) {
  std::string out;
  for (int i = 1; i <= shape.length(); ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= shape.part(i); ++j) {
      if (j > 1) out += ',';
      auto it = s.find({i, j});
      if (it == s.end()) {
        out += '.';
        continue;
      }
      out += it->second.label ? std::to_string(it->second.label) : "*";
      out += arrow_suffix(it->second.arrow);
    }
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidArgument("bad tableau cell '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

std::pair<Partition, State> parse_state(std::string_view text) {
  text = trim(text);
  std::vector<int> lengths;
  State s;
  if (text.empty() || text == "()") return {Partition{}, s};
  int i = 0;
  for (std::string_view row : split(text, '/')) {
    ++i;
    int j = 0;
    for (std::string_view raw : split(row, ',')) {
      ++j;
      std::string_view cell = trim(raw);
      if (cell == ".") continue;
      std::size_t pos = cell.find_first_of("^_");
      std::string_view head = cell.substr(0, pos);
      Cell c;
      if (head != "*") c.label = parse_int(head, cell);
      if (pos != std::string_view::npos) {
        c.arrow.kind = cell[pos] == '^' ? Arrow::Kind::right : Arrow::Kind::down;
        c.arrow.offset = parse_int(cell.substr(pos + 1), cell);
      }
      s[{i, j}] = c;
    }
    lengths.push_back(j);
  }
  if (!std::is_sorted(lengths.rbegin(), lengths.rend())) throw InvalidArgument("row lengths must weakly decrease");
  return {Partition(lengths), s};
}

int new_max(const State& s, int row) {
  int m = 0;
  for (const auto& [b, c] : s)
    if (b.row == row) m = std::max(m, c.label);
  return m + 1;
}

const Box* mark_in_column(const State& s, int col) {
  for (const auto& [b, c] : s)
    if (b.col == col) return &b;
  return nullptr;
}

// Row `row`: the labeled boxes in columns (c, C] move to {c} u (their columns \ {C}),
// keeping the order of the labels.
void shift_left(State& s, int row, int c, int C) {
  std::vector<int> cols, labels;
  for (const auto& [b, cell] : s)
    if (b.row == row && b.col > c && b.col <= C) {
      cols.push_back(b.col);
      labels.push_back(cell.label);
    }
  if (cols.empty()) return;
  for (int col : cols) s.erase({row, col});
  std::vector<int> target{c};
  for (int col : cols)
    if (col != C) target.push_back(col);
  for (std::size_t t = 0; t < target.size(); ++t) s[{row, target[t]}] = Cell{labels[t], {}};
}

// Inverse move: labeled boxes in columns [lo, C) move to (their columns \ {lo}) u {C}.
void shift_right(State& s, int row, int lo, int C) {
  std::vector<int> cols, labels;
  for (const auto& [b, cell] : s)
    if (b.row == row && b.col >= lo && b.col < C) {
      cols.push_back(b.col);
      labels.push_back(cell.label);
    }
  if (cols.empty()) return;
  for (int col : cols) s.erase({row, col});
  std::vector<int> target;
  for (int col : cols)
    if (col != lo) target.push_back(col);
  target.push_back(C);
  for (std::size_t t = 0; t < target.size(); ++t) s[{row, target[t]}] = Cell{labels[t], {}};
}

std::pair<Box, int> row_max(const State& s, int row) {
  Box best{row, 0};
  int m = 0;
  for (const auto& [b, c] : s)
    if (b.row == row && c.label > m) {
      m = c.label;
      best = b;
    }
  return {best, m};
}

}  // namespace

bool HookTableau::is_valid() const {
  std::map<int, int> row_of_col;
  for (const auto& [b, a] : marks) {
    if (!shape.has_box(b)) return false;
    if (!row_of_col.emplace(b.col, b.row).second) return false;
  }
  for (const auto& [col, row] : row_of_col) {
    auto it = row_of_col.find(col + 1);
    if (it != row_of_col.end() && it->second > row) return false;
  }
  for (const auto& [b, a] : marks) {
    if (a.kind == Arrow::Kind::none) continue;
    if (!marks.count({b.row, b.col - 1})) return false;
    if (a.kind == Arrow::Kind::right && (a.offset < 0 || a.offset > shape.arm(b))) return false;
    if (a.kind == Arrow::Kind::down && (a.offset < 1 || a.offset > shape.leg(b))) return false;
  }
  return true;
}

std::vector<Box> HookTableau::critical_boxes() const {
  std::vector<Box> out;
  for (const auto& [b, a] : marks)
    if (marks.count({b.row, b.col - 1})) out.push_back(b);
  return out;
}

PolyAlpha HookTableau::weight() const {
  std::size_t n = 0;
  for (const auto& [b, a] : marks) n += a.kind == Arrow::Kind::right;
  return PolyAlpha::monomial(1, n);
}

std::string HookTableau::to_string() const {
  State s;
  for (const auto& [b, a] : marks) s[b] = Cell{0, a};
  return render(shape, s);
}

bool PermutedTableau::is_valid() const {
  std::map<int, int> seen;
  for (const auto& [b, l] : labels) {
    if (!shape.has_box(b)) return false;
    if (!seen.emplace(b.col, b.row).second) return false;
  }
  for (int i = 1; i <= shape.length(); ++i) {
    auto w = row_word(i);
    std::sort(w.begin(), w.end());
    for (std::size_t t = 0; t < w.size(); ++t)
      if (w[t] != static_cast<int>(t) + 1) return false;
  }
  return true;
}

std::vector<int> PermutedTableau::row_word(int row) const {
  std::vector<int> w;
  for (const auto& [b, l] : labels)
    if (b.row == row) w.push_back(l);
  return w;
}

PolyAlpha PermutedTableau::weight() const {
  std::size_t e = 0;
  for (int i = 1; i <= shape.length(); ++i) {
    auto w = row_word(i);
    if (!w.empty()) e += w.size() - static_cast<std::size_t>(lrmin(w));
  }
  return PolyAlpha::monomial(1, e);
}

std::string PermutedTableau::to_string() const {
  State s;
  for (const auto& [b, l] : labels) s[b] = Cell{l, {}};
  return render(shape, s);
}

HookTableau parse_hook_tableau(std::string_view text) {
  auto [shape, s] = parse_state(text);
  HookTableau T{shape, {}};
  for (const auto& [b, c] : s) {
    if (c.label) throw InvalidArgument("hook tableaux carry no labels");
    T.marks[b] = c.arrow;
  }
  return T;
}

PermutedTableau parse_permuted_tableau(std::string_view text) {
  auto [shape, s] = parse_state(text);
  PermutedTableau T{shape, {}};
  for (const auto& [b, c] : s) {
    if (!c.label || c.arrow.kind != Arrow::Kind::none)
      throw InvalidArgument("permuted tableaux carry labels and no arrows");
    T.labels[b] = c.label;
  }
  return T;
}

PermutedTableau psi(const HookTableau& T, std::vector<TraceStep>* trace) {
  State s;
  for (const auto& [b, a] : T.marks) s[b] = Cell{0, a};
  std::vector<Box> order;
  for (const auto& [b, a] : T.marks) order.push_back(b);
  std::sort(order.begin(), order.end(), [](const Box& x, const Box& y) { return x.col > y.col; });
  auto log = [&](const std::string& rule) {
    if (trace) trace->push_back({rule, render(T.shape, s)});
  };
  if (!order.empty()) {
    s[order[0]].label = 1;
    log("start");
  }
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Box A = order[idx];
    const bool last = idx + 1 == order.size();
    const Cell cell = s.at(A);
    if (cell.arrow.kind == Arrow::Kind::none) {
      if (!last) s[order[idx + 1]].label = new_max(s, order[idx + 1].row);
      s[A].arrow = {};
      log("N");
      continue;
    }
    if (last || order[idx + 1] != Box{A.row, A.col - 1})
      throw InvalidArgument("arrow on a non-critical box " + T.to_string());
    s[order[idx + 1]].label = cell.label;
    s.erase(A);
    if (cell.arrow.kind == Arrow::Kind::down) {
      Box P{A.row + cell.arrow.offset, A.col};
      s[P] = Cell{new_max(s, P.row), {}};
      log("D");
      continue;
    }
    const int c = A.col, C = A.col + cell.arrow.offset;
    const Box* X = mark_in_column(s, C);
    if (!X) {
      s[{A.row, C}] = Cell{new_max(s, A.row), {}};
      log("Re");
    } else if (X->row <= A.row) {
      shift_left(s, X->row, c, C);
      s[{A.row, C}] = Cell{new_max(s, A.row), {}};
      log("Ra");
    } else {
      const int rb = X->row;
      shift_left(s, rb, c, C);
      s[{rb, C}] = Cell{new_max(s, rb), {}};
      log("Rb");
    }
  }
  PermutedTableau out{T.shape, {}};
  for (const auto& [b, c] : s) out.labels[b] = c.label;
  return out;
}

HookTableau phi(const PermutedTableau& T, std::vector<TraceStep>* trace) {
  State s;
  for (const auto& [b, l] : T.labels) s[b] = Cell{l, {}};
  auto log = [&](const std::string& rule) {
    if (trace) trace->push_back({rule, render(T.shape, s)});
  };
  log("start");
  while (true) {
    const Box* act = nullptr;
    for (const auto& [b, c] : s)
      if (c.label && (!act || b.col < act->col)) act = &b;
    if (!act) break;
    const Box A = *act;
    const int i = A.row, c = A.col, a = s[A].label;
    const Box* Y = mark_in_column(s, c + 1);
    if (Y && Y->row > i) {
      const Box X = *Y;
      auto [mbox, m] = row_max(s, X.row);
      s[A].label = 0;
      if (s[X].label == m) {
        s.erase(X);
        s[{i, c + 1}] = Cell{a, {Arrow::Kind::down, X.row - i}};
        log("Bm");
      } else {
        s.erase(mbox);
        shift_right(s, X.row, c + 1, mbox.col);
        s[{i, c + 1}] = Cell{a, {Arrow::Kind::right, mbox.col - (c + 1)}};
        log("Bn");
      }
      continue;
    }
    auto [mbox, m] = row_max(s, i);
    if (a == m) {
      s[A].label = 0;
      log("M");
      continue;
    }
    const int yrow = Y ? Y->row : 0;
    s[A].label = 0;
    s.erase(mbox);
    std::string rule = "E";
    if (yrow) {
      shift_right(s, yrow, c + 1, mbox.col);
      rule = "A";
    }
    s[{i, c + 1}] = Cell{a, {Arrow::Kind::right, mbox.col - (c + 1)}};
    log(rule);
  }
  HookTableau out{T.shape, {}};
  for (const auto& [b, c] : s) out.marks[b] = c.arrow;
  return out;
}

namespace {

// Column-distinct placements: rows[c-1] is the marked row of column c, or 0.
void for_each_placement(const Partition& lambda, int k, bool ks_rule,
                        const std::function<void(const std::vector<int>&)>& f) {
  const int ncols = lambda.part(1);
  Partition conj = lambda.conjugate();
  std::vector<int> rows(ncols, 0);
  auto rec = [&](auto&& self, int col, int left) -> void {
    if (left == 0) {
      f(rows);
      return;
    }
    if (col > ncols || ncols - col + 1 < left) return;
    self(self, col + 1, left);
    for (int r = 1; r <= conj.part(col); ++r) {
      if (ks_rule && col > 1 && rows[col - 2] && r > rows[col - 2]) continue;
      rows[col - 1] = r;
      self(self, col + 1, left - 1);
      rows[col - 1] = 0;
    }
  };
  rec(rec, 1, k);
}

}  // namespace

void for_each_hook_tableau(const Partition& lambda, int k, const std::function<void(const HookTableau&)>& f) {
  if (k < 0 || k > lambda.size()) return;
  for_each_placement(lambda, k, true, [&](const std::vector<int>& rows) {
    HookTableau T{lambda, {}};
    for (std::size_t c = 0; c < rows.size(); ++c)
      if (rows[c]) T.marks[{rows[c], static_cast<int>(c) + 1}] = {};
    auto crit = T.critical_boxes();
    auto rec = [&](auto&& self, std::size_t t) -> void {
      if (t == crit.size()) {
        f(T);
        return;
      }
      const Box b = crit[t];
      Arrow& a = T.marks[b];
      a = {};
      self(self, t + 1);
      for (int o = 0; o <= lambda.arm(b); ++o) {
        a = {Arrow::Kind::right, o};
        self(self, t + 1);
      }
      for (int o = 1; o <= lambda.leg(b); ++o) {
        a = {Arrow::Kind::down, o};
        self(self, t + 1);
      }
      a = {};
    };
    rec(rec, 0);
  });
}

void for_each_permuted_tableau(const Partition& lambda, int k,
                               const std::function<void(const PermutedTableau&)>& f) {
  if (k < 0 || k > lambda.size()) return;
  for_each_placement(lambda, k, false, [&](const std::vector<int>& rows) {
    std::vector<std::vector<Box>> per_row(lambda.length() + 1);
    for (std::size_t c = 0; c < rows.size(); ++c)
      if (rows[c]) per_row[rows[c]].push_back({rows[c], static_cast<int>(c) + 1});
    std::vector<std::vector<int>> words(per_row.size());
    for (std::size_t r = 0; r < per_row.size(); ++r) {
      words[r].resize(per_row[r].size());
      std::iota(words[r].begin(), words[r].end(), 1);
    }
    PermutedTableau T{lambda, {}};
    auto rec = [&](auto&& self, std::size_t r) -> void {
      if (r == per_row.size()) {
        f(T);
        return;
      }
      do {
        for (std::size_t t = 0; t < per_row[r].size(); ++t) T.labels[per_row[r][t]] = words[r][t];
        self(self, r + 1);
      } while (std::next_permutation(words[r].begin(), words[r].end()));
    };
    rec(rec, 0);
  });
}

PolyAlpha ko_onepart_tableaux(int k, const Partition& lambda, TableauFamily family) {
  PolyAlpha acc;
  if (family == TableauFamily::hook)
    for_each_hook_tableau(lambda, k, [&](const HookTableau& T) { acc += T.weight(); });
  else
    for_each_permuted_tableau(lambda, k, [&](const PermutedTableau& T) { acc += T.weight(); });
  return acc;
}

PolyAlpha p_weight(int i) {
  PolyAlpha acc = 1;
  for (int j = 0; j < i; ++j) acc *= PolyAlpha{Rational(1), Rational(j)};
  return acc;
}

PolyAlpha ko_onepart_subsets(int k, const Partition& lambda) {
  PolyAlpha acc;
  if (k < 0 || k > lambda.size()) return acc;
  for_each_placement(lambda, k, false, [&](const std::vector<int>& rows) {
    std::vector<int> count(lambda.length() + 1, 0);
    for (int r : rows)
      if (r) ++count[r];
    PolyAlpha w = 1;
    for (int c : count) w *= p_weight(c);
    acc += w;
  });
  return acc;
}

namespace {

// Weighted count of skeletons with a_i rows in row-block i and b_j columns in
// column-block j: each column holds one mark, each row at least one, and a
// row of block i only meets columns of blocks j >= i.
PolyAlpha skeleton_weight(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> col_block, row_block;
  for (std::size_t j = 0; j < b.size(); ++j) col_block.insert(col_block.end(), b[j], static_cast<int>(j));
  for (std::size_t i = 0; i < a.size(); ++i) row_block.insert(row_block.end(), a[i], static_cast<int>(i));
  const int k = static_cast<int>(col_block.size());
  const unsigned full = (1u << k) - 1;
  std::vector<PolyAlpha> f(full + 1);
  f[0] = 1;
  for (int rb : row_block) {
    unsigned allowed = 0;
    for (int c = 0; c < k; ++c)
      if (col_block[c] >= rb) allowed |= 1u << c;
    std::vector<PolyAlpha> g(full + 1);
    for (unsigned mask = 0; mask <= full; ++mask) {
      if (f[mask].is_zero()) continue;
      unsigned free = allowed & ~mask;
      for (unsigned sub = free; sub; sub = (sub - 1) & free)
        g[mask | sub] += f[mask] * p_weight(std::popcount(sub));
    }
    f = std::move(g);
  }
  return f[full];
}

}  // namespace

FFExpansion ko_onepart_ff(int k, int d) {
  if (k < 0 || d < 0) throw InvalidArgument("negative k or d");
  if (k > 20) throw LimitExceeded("k too large for the skeleton expansion");
  FFExpansion out(d);
  if (d == 0) {
    if (k == 0) out.add({0, Exponent{}}, 1);
    return out;
  }
  std::vector<int> b(d, 0), a(d, 0);
  // columns per block (compositions of k), then rows per block (at most k in total)
  auto rows = [&](auto&& self, int i, int left) -> void {
    if (i == d) {
      PolyAlpha w = skeleton_weight(a, b);
      if (w.is_zero()) return;
      Integer denom = 1;
      for (int x : a) denom *= factorial(static_cast<unsigned long>(x));
      for (int x : b) denom *= factorial(static_cast<unsigned long>(x));
      FFKey key{0, Exponent(2 * static_cast<std::size_t>(d), 0)};
      for (int t = 0; t < d; ++t) {
        key.e[t] = static_cast<std::uint8_t>(a[t]);
        key.e[d + t] = static_cast<std::uint8_t>(b[t]);
      }
      for (int e = 0; e <= w.degree(); ++e) {
        if (w.coeff(e) == 0) continue;
        key.alpha = e;
        out.add(key, w.coeff(e) / Rational(denom));
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[i] = x;
      self(self, i + 1, left - x);
    }
    a[i] = 0;
  };
  auto cols = [&](auto&& self, int j, int left) -> void {
    if (j == d - 1) {
      b[j] = left;
      rows(rows, 0, k);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      b[j] = x;
      self(self, j + 1, left - x);
    }
  };
  cols(cols, 0, k);
  return out;
}

}  // namespace jackpos
