#include "jackpos/falling_factorial.hpp"

#include <deque>
#include <mutex>

#include "jackpos/errors.hpp"

namespace jackpos {

Rational FFExpansion::coeff(const FFKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FFExpansion::add(const FFKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string to_string(const FFKey& k, int d) {
  std::string out;
  if (k.alpha) out += k.alpha == 1 ? "alpha" : "alpha^" + std::to_string(k.alpha);
  for (int v = 0; v < 2 * d; ++v) {
    if (!k.e[v]) continue;
    if (!out.empty()) out += "*";
    out += "(" + std::string(v < d ? "p" : "r") + std::to_string(v < d ? v + 1 : v - d + 1) + ")_" +
           std::to_string(k.e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string FFExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += jackpos::to_string(c) + "*" + jackpos::to_string(k, d_);
  }
  return out;
}

namespace {

// Row n of the Stirling triangle of the second kind, memoized.
const std::vector<Integer>& stirling2_row(unsigned n) {
  static std::mutex mu;
  static std::deque<std::vector<Integer>> rows{{1}};
  std::lock_guard lock(mu);
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::size_t m = rows.size();
    std::vector<Integer> row(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k) {
      Integer a = k < prev.size() ? prev[k] : Integer(0);
      row[k] = a * static_cast<unsigned long>(k) + prev[k - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

// Coefficients of x^i in (x)_n.
std::vector<Integer> falling_coeffs(unsigned n) {
  std::vector<Integer> c{1};
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * static_cast<long>(j);
    }
    c = std::move(next);
  }
  return c;
}

template <class Table, class Emit>
void tensor_expand(const Exponent& e, const Table& table, Emit&& emit) {
  Exponent cur(e.size(), 0);
  Integer coef = 1;
  auto rec = [&](auto&& self, std::size_t v, const Integer& acc) -> void {
    if (v == e.size()) {
      emit(cur, acc);
      return;
    }
    const auto& row = table(e[v]);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      cur[v] = static_cast<std::uint8_t>(j);
      self(self, v + 1, acc * row[j]);
    }
  };
  rec(rec, 0, coef);
}

}  // namespace

Integer stirling2(unsigned n, unsigned k) {
  const auto& row = stirling2_row(n);
  return k < row.size() ? row[k] : Integer(0);
}

FFExpansion to_falling_factorial(const MultiPoly& P) {
  FFExpansion F(P.dim());
  for (const auto& [e, c] : P.terms()) {
    if (!c.is_polynomial())
      throw NonPolynomialAlpha("coefficient " + c.to_string() + " of " + exponent_to_string(e, P.dim()));
    const auto& cs = c.num().coeffs();
    tensor_expand(e, [](unsigned n) -> const std::vector<Integer>& { return stirling2_row(n); },
                  [&](const Exponent& ff, const Integer& m) {
                    for (std::size_t a = 0; a < cs.size(); ++a)
                      if (cs[a] != 0) F.add(FFKey{static_cast<int>(a), ff}, cs[a] * m);
                  });
  }
  return F;
}

MultiPoly from_falling_factorial(const FFExpansion& F) {
  MultiPoly P(F.dim());
  std::deque<std::vector<Integer>> cache;
  auto table = [&](unsigned n) -> const std::vector<Integer>& {
    while (cache.size() <= n) cache.push_back(falling_coeffs(static_cast<unsigned>(cache.size())));
    return cache[n];
  };
  for (const auto& [k, c] : F.terms()) {
    tensor_expand(k.e, table, [&](const Exponent& mono, const Integer& m) {
      P.add_term(mono, RatAlpha(PolyAlpha::monomial(c * m, static_cast<std::size_t>(k.alpha))));
    });
  }
  return P;
}

Certificate is_nonnegative(const FFExpansion& F) {
  Certificate cert;
  for (const auto& [k, c] : F.terms()) {
    if (c < 0) {
      cert.pass = false;
      cert.witnesses.emplace_back(k, c);
    }
  }
  return cert;
}

UPoly faulhaber(unsigned k) {
  static std::mutex mu;
  static std::vector<UPoly> memo;
  std::lock_guard lock(mu);
  // (n+1)^{k+1} - 1 = sum_{j<=k} C(k+1, j) S_j(n), solved upward in k.
  while (memo.size() <= k) {
    unsigned m = static_cast<unsigned>(memo.size());
    UPoly lhs = (UPoly{1, 1}).pow(m + 1) - UPoly(1);
    for (unsigned j = 0; j < m; ++j) lhs -= memo[j] * Rational(binomial(m + 1, j));
    memo.push_back(lhs * Rational(1, m + 1));
  }
  return memo[k];
}

nlohmann::json to_json(const FFExpansion& F) {
  const int d = F.dim();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : F.terms()) {
    nlohmann::json t;
    t["alpha"] = k.alpha;
    t["p"] = std::vector<int>(k.e.begin(), k.e.begin() + d);
    t["r"] = std::vector<int>(k.e.begin() + d, k.e.end());
    t["coeff"] = to_string(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

nlohmann::json to_json(const Certificate& c, int d) {
  nlohmann::json j;
  j["status"] = c.pass ? "PASS" : "FAIL";
  nlohmann::json w = nlohmann::json::array();
  for (const auto& [k, v] : c.witnesses) w.push_back({{"basis", to_string(k, d)}, {"coeff", to_string(v)}});
  j["witnesses"] = w;
  return j;
}

}  // namespace jackpos
