#include "jackpos/jack.hpp"

#include <algorithm>
#include <mutex>

#include "jackpos/errors.hpp"

namespace jackpos {

namespace {

PolyAlpha critical_factor(const Partition& lambda, Box b) {
  return PolyAlpha{Rational(lambda.leg(b) + 1), Rational(lambda.arm(b) + 1)};
}

}  // namespace

bool AdmissibleTableau::is_admissible() const {
  for (const auto& [b, v] : entries) {
    if (!shape.has_box(b)) return false;
    for (int i = 1; i <= shape.length(); ++i) {
      if (i == b.row) continue;
      auto it = entries.find({i, b.col});
      if (it != entries.end() && it->second == v) return false;
      if (i < b.row && b.col > 1) {
        auto jt = entries.find({i, b.col - 1});
        if (jt != entries.end() && jt->second == v) return false;
      }
    }
  }
  return static_cast<int>(entries.size()) == shape.size();
}

std::vector<Box> AdmissibleTableau::critical_boxes() const {
  std::vector<Box> out;
  for (const auto& [b, v] : entries) {
    if (b.col == 1) continue;
    auto it = entries.find({b.row, b.col - 1});
    if (it != entries.end() && it->second == v) out.push_back(b);
  }
  return out;
}

PolyAlpha AdmissibleTableau::weight() const {
  PolyAlpha w = 1;
  for (Box b : critical_boxes()) w *= critical_factor(shape, b);
  return w;
}

void for_each_admissible(const Partition& lambda, const Partition& tau,
                         const std::function<void(const AdmissibleTableau&)>& f) {
  if (lambda.size() != tau.size()) throw SizeMismatch(lambda.to_string() + " vs " + tau.to_string());
  auto boxes = lambda.boxes();
  std::vector<int> budget = tau.parts();
  AdmissibleTableau T{lambda, {}};
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == boxes.size()) {
      if (T.is_admissible()) f(T);
      return;
    }
    for (std::size_t v = 0; v < budget.size(); ++v) {
      if (!budget[v]) continue;
      --budget[v];
      T.entries[boxes[idx]] = static_cast<int>(v) + 1;
      self(self, idx + 1);
      T.entries.erase(boxes[idx]);
      ++budget[v];
    }
  };
  rec(rec, 0);
}

namespace {

// Values occurring once never create a critical box or a conflict, so they are
// collapsed into a single placeholder 0 and contribute s! at the end. The fill
// proceeds column by column; the rest of the fill depends only on the budget
// and the previous column, which is the memo key.
class KSEngine {
 public:
  KSEngine(const Partition& lambda, const Partition& tau) : lambda_(lambda), conj_(lambda.conjugate()) {
    budget_.push_back(0);
    for (int t : tau.parts()) {
      if (t == 1) ++budget_[0];
      else budget_.push_back(t);
    }
    singles_ = budget_[0];
  }

  PolyAlpha run() {
    std::vector<int> prev;
    PolyAlpha w = column(1, budget_, prev);
    return w * Rational(factorial(static_cast<unsigned long>(singles_)));
  }

 private:
  PolyAlpha column(int j, std::vector<int>& budget, const std::vector<int>& prev) {
    if (j > lambda_.part(1)) return 1;
    std::vector<int> key = budget;
    key.push_back(j);
    key.insert(key.end(), prev.begin(), prev.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int h = conj_.part(j);
    std::vector<int> cur(h, 0);
    PolyAlpha total;
    fill(j, 0, h, budget, prev, cur, PolyAlpha(1), 0U, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void fill(int j, int i, int h, std::vector<int>& budget, const std::vector<int>& prev,
            std::vector<int>& cur, const PolyAlpha& w, unsigned used, PolyAlpha& total) {
    if (i == h) {
      total += w * column(j + 1, budget, cur);
      return;
    }
    // values of the previous column strictly above row i
    unsigned above = 0;
    for (int t = 0; t < i && t < static_cast<int>(prev.size()); ++t)
      if (prev[t]) above |= 1U << prev[t];
    for (std::size_t v = 0; v < budget.size(); ++v) {
      if (!budget[v]) continue;
      if (v) {
        if (used & (1U << v)) continue;
        if (above & (1U << v)) continue;
      }
      --budget[v];
      cur[i] = static_cast<int>(v);
      bool crit = v && i < static_cast<int>(prev.size()) && prev[i] == static_cast<int>(v);
      if (crit) {
        fill(j, i + 1, h, budget, prev, cur, w * critical_factor(lambda_, {i + 1, j}),
             used | (1U << v), total);
      } else {
        fill(j, i + 1, h, budget, prev, cur, w, v ? used | (1U << v) : used, total);
      }
      ++budget[v];
    }
    cur[i] = 0;
  }

  Partition lambda_;
  Partition conj_;
  std::vector<int> budget_;
  int singles_ = 0;
  std::map<std::vector<int>, PolyAlpha> memo_;
};

std::mutex hatk_mu;
std::map<std::pair<Partition, Partition>, PolyAlpha> hatk_memo;
std::mutex theta_mu;
std::map<Partition, BasisExpansion> theta_memo;

}  // namespace

PolyAlpha hatK(const Partition& lambda, const Partition& tau) {
  if (lambda.size() != tau.size()) throw SizeMismatch(lambda.to_string() + " vs " + tau.to_string());
  if (tau.length() > 31) throw LimitExceeded("too many distinct values for the tableau engine");
  {
    std::lock_guard lock(hatk_mu);
    auto it = hatk_memo.find({lambda, tau});
    if (it != hatk_memo.end()) return it->second;
  }
  PolyAlpha w = KSEngine(lambda, tau).run();
  std::lock_guard lock(hatk_mu);
  hatk_memo.emplace(std::make_pair(lambda, tau), w);
  return w;
}

BasisExpansion jack_monomial(const Partition& lambda) {
  BasisExpansion e;
  for (const Partition& tau : partitions_of(lambda.size())) e.add(tau, hatK(lambda, tau));
  return e;
}

BasisExpansion jack_powersum(const Partition& lambda) {
  {
    std::lock_guard lock(theta_mu);
    auto it = theta_memo.find(lambda);
    if (it != theta_memo.end()) return it->second;
  }
  BasisExpansion e = monomial_to_powersum(jack_monomial(lambda));
  std::lock_guard lock(theta_mu);
  theta_memo.emplace(lambda, e);
  return e;
}

PolyAlpha theta(const Partition& tau, const Partition& lambda) {
  if (lambda.size() != tau.size()) throw SizeMismatch(lambda.to_string() + " vs " + tau.to_string());
  RatAlpha c = jack_powersum(lambda).coeff(tau);
  if (!c.is_polynomial()) throw NonPolynomialAlpha("theta coefficient " + c.to_string());
  return c.num();
}

PolyAlpha ch(const Partition& mu, const Partition& lambda) {
  const int n = lambda.size(), k = mu.size();
  if (n < k) return {};
  const int m1 = mu.multiplicity(1);
  Rational pre(binomial(n - k + m1, m1) * z(mu));
  return theta(mu.with_parts(1, n - k), lambda) * pre;
}

PolyAlpha ko(const Partition& mu, const Partition& lambda) {
  const int n = lambda.size(), k = mu.size();
  if (n < k) return {};
  return hatK(lambda, mu.with_parts(1, n - k)) *
         (Rational(1) / Rational(factorial(static_cast<unsigned long>(n - k))));
}

Rational zonal_spherical(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw SizeMismatch(mu.to_string() + " vs " + nu.to_string());
  const int k = mu.size();
  Rational th = theta(nu, mu).eval(2);
  Integer two_l = Integer(1) << nu.length();
  Integer two_k = Integer(1) << k;
  return th * Rational(z(nu) * two_l) / Rational(two_k * factorial(static_cast<unsigned long>(k)));
}

}  // namespace jackpos
