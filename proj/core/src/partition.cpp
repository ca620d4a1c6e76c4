#include "jackpos/partition.hpp"

#include <algorithm>
#include <functional>
#include <deque>
#include <mutex>
#include <numeric>

#include "jackpos/errors.hpp"

namespace jackpos {

Partition::Partition(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw InvalidArgument("negative part in partition");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int cnt = 0;
    while (cnt < length() && parts_[cnt] >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

int Partition::leg(Box b) const {
  int l = 0;
  while (part(b.row + l + 1) >= b.col) ++l;
  return l;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

Partition Partition::with_parts(int value, int count) const {
  std::vector<int> v = parts_;
  for (int i = 0; i < count; ++i) v.push_back(value);
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s += c;
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    pos = next + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw InvalidArgument("parts must be weakly decreasing: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::deque<std::vector<Partition>> memo;
  std::lock_guard lock(mu);
  if (n < 0) throw InvalidArgument("negative size");
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
      if (rest == 0) {
        out.emplace_back(cur);
        return;
      }
      for (int x = std::min(rest, maxpart); x >= 1; --x) {
        cur.push_back(x);
        rec(rest - x, x);
        cur.pop_back();
      }
    };
    rec(m, m);
    memo.push_back(std::move(out));
  }
  return memo[n];
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    const auto& ps = partitions_of(m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<long> MultiRect::q() const {
  if (p.size() != r.size()) throw InvalidArgument("p and r differ in length");
  std::vector<long> q(r.size());
  long acc = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    acc += r[i];
    q[i] = acc;
  }
  return q;
}

nlohmann::json to_json(const MultiRect& m) { return {{"p", m.p}, {"r", m.r}}; }

Partition to_partition(const MultiRect& m) {
  auto q = m.q();
  std::vector<int> parts;
  for (std::size_t s = 0; s < q.size(); ++s) {
    if (m.p[s] < 0 || m.r[s] < 0) throw InvalidArgument("negative multirectangular coordinate");
    for (long i = 0; i < m.p[s]; ++i) parts.push_back(static_cast<int>(q[s]));
  }
  return Partition(std::move(parts));
}

MultiRect from_partition(const Partition& lambda, int d) {
  std::vector<int> values;
  std::vector<long> mult;
  for (int x : lambda.parts()) {
    if (values.empty() || values.back() != x) {
      values.push_back(x);
      mult.push_back(0);
    }
    ++mult.back();
  }
  int m = static_cast<int>(values.size());
  if (m > d) throw TooManyBlocks(lambda.to_string() + " needs " + std::to_string(m) + " rectangles");
  MultiRect out{std::vector<long>(d, 0), std::vector<long>(d, 0)};
  for (int t = 0; t < m; ++t) {
    int s = d - m + t;
    out.p[s] = mult[t];
    out.r[s] = values[t] - (t + 1 < m ? values[t + 1] : 0);
  }
  return out;
}

Partition dilate(const Partition& lambda, int s) {
  if (s < 1) throw InvalidArgument("dilation factor must be positive");
  std::vector<int> parts;
  for (int x : lambda.parts())
    for (int i = 0; i < s; ++i) parts.push_back(x * s);
  return Partition(std::move(parts));
}

std::pair<PolyAlpha, PolyAlpha> hook_products(const Partition& lambda) {
  PolyAlpha H = 1;
  PolyAlpha Hp = 1;
  for (Box b : lambda.boxes()) {
    long a = lambda.arm(b);
    long l = lambda.leg(b);
    H *= PolyAlpha{Rational(l + 1), Rational(a)};
    Hp *= PolyAlpha{Rational(l), Rational(a + 1)};
  }
  return {H, Hp};
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (lambda.part(i) < mu.part(i)) return false;
  return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch(lambda.to_string() + " vs " + mu.to_string());
  int a = 0, b = 0;
  for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool refines(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch(lambda.to_string() + " vs " + mu.to_string());
  std::vector<int> cap = mu.parts();
  const auto& parts = lambda.parts();
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == parts.size()) return true;
    for (std::size_t j = 0; j < cap.size(); ++j) {
      if (cap[j] < parts[i]) continue;
      if (j > 0 && cap[j] == cap[j - 1] && mu.parts()[j] == mu.parts()[j - 1]) continue;
      cap[j] -= parts[i];
      bool ok = rec(i + 1);
      cap[j] += parts[i];
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

Orders orders(const Partition& lambda, const Partition& mu) {
  Orders o{contains(lambda, mu), false, false};
  if (lambda.size() == mu.size()) {
    o.dominates = dominates(lambda, mu);
    o.refines = refines(lambda, mu);
  } else {
    throw SizeMismatch("dominance/refinement need equal sizes");
  }
  return o;
}

Integer z(const Partition& mu) {
  Integer r = 1;
  for (int i = 1; i <= mu.part(1); ++i) {
    int m = mu.multiplicity(i);
    if (m == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    r *= pw * factorial(static_cast<unsigned long>(m));
  }
  return r;
}

}  // namespace jackpos
