#include <algorithm>
#include <numeric>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"

namespace jackpos {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= size() || seen[x]) throw InvalidArgument("not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v;
  for (int x : images) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::canonical(const Partition& mu) {
  std::vector<int> v(mu.size());
  int start = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) v[start + i] = start + (i + 1) % len;
    start += len;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw GroundSetMismatch("permutation sizes differ");
  std::vector<int> v(a.img_.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a.img_[b.img_[i]];
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

int Permutation::num_cycles() const {
  std::vector<char> seen(img_.size(), 0);
  int c = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return c;
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

std::string Permutation::to_string() const {
  std::vector<char> seen(img_.size(), 0);
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    s += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

int lrmin(const std::vector<int>& word) {
  if (word.empty()) throw InvalidArgument("lrmin of an empty word");
  int count = 0;
  int best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] < best) {
      best = word[i];
      ++count;
    }
  }
  return count;
}

}  // namespace jackpos
