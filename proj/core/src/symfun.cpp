#include "jackpos/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "jackpos/errors.hpp"

namespace jackpos {

void BasisExpansion::add(const Partition& key, const RatAlpha& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

RatAlpha BasisExpansion::coeff(const Partition& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? RatAlpha() : it->second;
}

namespace {

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch(a.to_string() + " vs " + b.to_string());
}

}  // namespace

Integer L(const Partition& nu, const Partition& mu) {
  require_same_size(nu, mu);
  std::vector<int> cap = mu.parts();
  const auto& parts = nu.parts();
  Integer count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == parts.size()) {
      ++count;
      return;
    }
    for (int& c : cap) {
      if (c < parts[i]) continue;
      c -= parts[i];
      self(self, i + 1);
      c += parts[i];
    }
  };
  rec(rec, 0);
  return count;
}

Integer kostka(const Partition& lambda, const Partition& tau) {
  require_same_size(lambda, tau);
  // Value v fills a horizontal strip of size tau_v on top of the current shape.
  const int rows = lambda.length();
  const auto& t = tau.parts();
  std::vector<int> shape(rows, 0);
  Integer count = 0;
  auto strip = [&](auto&& self, std::size_t v, int row, int left, const std::vector<int>& prev) -> void {
    if (v == t.size()) {
      ++count;
      return;
    }
    if (row == rows) {
      if (left == 0) {
        std::vector<int> next = shape;
        self(self, v + 1, 0, v + 1 < t.size() ? t[v + 1] : 0, next);
      }
      return;
    }
    // boxes added to `row`: at most the room under the previous row (in prev shape)
    int room = (row == 0 ? lambda.part(1) : prev[row - 1]) - shape[row];
    room = std::min(room, lambda.part(row + 1) - shape[row]);
    for (int a = std::min(room, left); a >= 0; --a) {
      shape[row] += a;
      self(self, v, row + 1, left - a, prev);
      shape[row] -= a;
    }
  };
  if (t.empty()) return 1;
  strip(strip, 0, 0, t[0], std::vector<int>(shape));
  return count;
}

Integer syt_count(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) throw NotContained(mu.to_string() + " not inside " + lambda.to_string());
  std::map<std::vector<int>, Integer> memo;
  auto rec = [&](auto&& self, std::vector<int>& shape) -> Integer {
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    Integer total = 0;
    bool full = true;
    for (int i = 0; i < lambda.length(); ++i) {
      if (shape[i] >= lambda.part(i + 1)) continue;
      full = false;
      if (i > 0 && shape[i - 1] <= shape[i]) continue;
      ++shape[i];
      total += self(self, shape);
      --shape[i];
    }
    if (full) total = 1;
    memo.emplace(shape, total);
    return total;
  };
  std::vector<int> shape(lambda.length(), 0);
  for (int i = 0; i < mu.length(); ++i) shape[i] = mu.part(i + 1);
  return rec(rec, shape);
}

namespace {

// Hook length formula, used to close the recursion once only 1-cycles remain.
Integer f_lambda(const Partition& lambda) {
  Integer h = 1;
  for (Box b : lambda.boxes()) h *= lambda.arm(b) + lambda.leg(b) + 1;
  return factorial(lambda.size()) / h;
}

std::mutex char_mu;
std::map<std::pair<Partition, Partition>, Integer> char_memo;

Integer mn(const Partition& lambda, const Partition& tau) {
  if (tau.empty()) return 1;
  if (tau.part(1) == 1) return f_lambda(lambda);
  {
    std::lock_guard lock(char_mu);
    auto it = char_memo.find({lambda, tau});
    if (it != char_memo.end()) return it->second;
  }
  // Beta numbers; removing a rim hook of length r moves one bead down by r.
  const int len = tau.part(1);
  std::vector<int> rest(tau.parts().begin() + 1, tau.parts().end());
  Partition tail(rest);
  const int ell = lambda.length();
  std::vector<int> beta(ell);
  for (int i = 0; i < ell; ++i) beta[i] = lambda.part(i + 1) + ell - 1 - i;
  std::set<int> beads(beta.begin(), beta.end());
  Integer total = 0;
  for (int b : beta) {
    int nb = b - len;
    if (nb < 0 || beads.count(nb)) continue;
    int between = 0;
    for (int x : beta)
      if (x > nb && x < b) ++between;
    std::vector<int> nbeta;
    for (int x : beta) nbeta.push_back(x == b ? nb : x);
    std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < ell; ++i) parts.push_back(nbeta[i] - (ell - 1 - i));
    Integer v = mn(Partition(parts), tail);
    total += between % 2 ? Integer(-v) : v;
  }
  std::lock_guard lock(char_mu);
  char_memo.emplace(std::make_pair(lambda, tau), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& tau) {
  require_same_size(lambda, tau);
  return mn(lambda, tau);
}

BasisExpansion monomial_to_powersum(const BasisExpansion& e) {
  if (e.basis != BasisExpansion::Basis::monomial) throw InvalidArgument("expected a monomial expansion");
  BasisExpansion out;
  out.basis = BasisExpansion::Basis::powersum;
  if (e.coeffs.empty()) return out;
  const int n = e.coeffs.begin()->first.size();
  for (const auto& [k, c] : e.coeffs)
    if (k.size() != n) throw SizeMismatch("mixed degrees in expansion");
  // c_rho = sum_tau theta_tau L(tau, rho); finer tau (longer) are solved first.
  std::vector<Partition> order = partitions_of(n);
  std::stable_sort(order.begin(), order.end(),
                   [](const Partition& a, const Partition& b) { return a.length() > b.length(); });
  for (const Partition& rho : order) {
    RatAlpha acc = e.coeff(rho);
    for (const auto& [tau, th] : out.coeffs) {
      if (tau.length() <= rho.length()) continue;
      Integer l = L(tau, rho);
      if (l != 0) acc -= th * RatAlpha(Rational(l));
    }
    acc *= RatAlpha(Rational(1, 1) / Rational(L(rho, rho)));
    out.add(rho, acc);
  }
  return out;
}

BasisExpansion powersum_to_monomial(const BasisExpansion& e) {
  if (e.basis != BasisExpansion::Basis::powersum) throw InvalidArgument("expected a power-sum expansion");
  BasisExpansion out;
  out.basis = BasisExpansion::Basis::monomial;
  if (e.coeffs.empty()) return out;
  const int n = e.coeffs.begin()->first.size();
  for (const auto& [tau, c] : e.coeffs)
    for (const Partition& rho : partitions_of(n)) {
      Integer l = L(tau, rho);
      if (l != 0) out.add(rho, c * RatAlpha(Rational(l)));
    }
  return out;
}

}  // namespace jackpos
