#include "jackpos/shifted.hpp"

#include <memory>
#include <mutex>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/falling_factorial.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/symfun.hpp"

namespace jackpos {

RatAlpha p_star(int k, const Partition& lambda) {
  // (alpha x + c)^k with x = lambda_i and c = 1/2 - i, minus the x = 0 value
  PolyAlpha acc;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational c = Rational(1, 2) - i;
    PolyAlpha lin{c, Rational(lambda.part(i))};
    acc += lin.pow(static_cast<unsigned>(k));
    acc -= PolyAlpha(c).pow(static_cast<unsigned>(k));
  }
  return acc;
}

RatAlpha p_star(const Partition& nu, const Partition& lambda) {
  RatAlpha acc = 1;
  for (int part : nu.parts()) acc *= p_star(part, lambda);
  return acc;
}

Rational p_star(const Partition& nu, const Partition& lambda, const Rational& alpha) {
  Rational acc = 1;
  for (int k : nu.parts()) {
    Rational s = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
      Rational c = Rational(1, 2) - i;
      Rational x = alpha * lambda.part(i) + c;
      Rational a = 1, b = 1;
      for (int t = 0; t < k; ++t) {
        a *= x;
        b *= c;
      }
      s += a - b;
    }
    acc *= s;
  }
  return acc;
}

RatAlpha psi(const Partition& lambda, const Rational& z) {
  const int ell = lambda.length();
  if (z + ell == 0) throw PoleEncountered("z = " + to_string(z));
  PolyAlpha num = PolyAlpha(z);
  PolyAlpha den = PolyAlpha(z + ell);
  for (int i = 1; i <= ell; ++i) {
    num *= PolyAlpha{z + i, Rational(-lambda.part(i))};
    den *= PolyAlpha{z + i - 1, Rational(-lambda.part(i))};
  }
  return RatAlpha(num, den);
}

Rational psi(const Partition& lambda, const Rational& z, const Rational& alpha) {
  const int ell = lambda.length();
  Rational num = z, den = z + ell;
  for (int i = 1; i <= ell; ++i) {
    num *= z - alpha * lambda.part(i) + i;
    den *= z - alpha * lambda.part(i) + i - 1;
  }
  if (den == 0) throw PoleEncountered("z = " + to_string(z) + ", alpha = " + to_string(alpha));
  return num / den;
}

RatAlpha p_theta(int k, const Partition& lambda) {
  if (k < 1) throw InvalidArgument("p_theta index must be positive");
  // psi = prod (z - a)/(z - b) and log(1 - a/z) - log(1 - b/z) = sum_m (b^m - a^m)/(m z^m)
  const int ell = lambda.length();
  const auto K = static_cast<unsigned>(k);
  PolyAlpha acc = PolyAlpha(Rational(-ell)).pow(K);
  for (int i = 1; i <= ell; ++i) {
    Rational lp = lambda.part(i);
    acc += PolyAlpha{Rational(1 - i), lp}.pow(K);
    acc -= PolyAlpha{Rational(-i), lp}.pow(K);
  }
  return acc;
}

namespace {

MultiPoly alpha_times(const MultiPoly& P) { return P * RatAlpha::alpha(); }

MultiPoly p_prefix(int d, int s) {
  MultiPoly P(d);
  for (int t = 1; t <= s; ++t) P += MultiPoly::p(d, t);
  return P;
}

MultiPoly q_suffix(int d, int s) {
  MultiPoly Q(d);
  for (int t = s; t <= d; ++t) Q += MultiPoly::r(d, t);
  return Q;
}

MultiPoly eval_upoly(const UPoly& f, const MultiPoly& x) {
  MultiPoly acc(x.dim());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x;
    acc += MultiPoly::constant(x.dim(), RatAlpha(c[i]));
  }
  return acc;
}

}  // namespace

PsiFactors psi_multirect_factors(int d) {
  PsiFactors f;
  f.zeros.push_back(MultiPoly(d));
  for (int s = 1; s <= d; ++s) f.zeros.push_back(alpha_times(q_suffix(d, s)) - p_prefix(d, s));
  for (int s = 1; s <= d + 1; ++s) f.poles.push_back(alpha_times(q_suffix(d, s)) - p_prefix(d, s - 1));
  return f;
}

MultiPoly p_theta_multirect(int k, int d) {
  auto f = psi_multirect_factors(d);
  MultiPoly acc(d);
  for (const auto& b : f.poles) acc += b.pow(static_cast<unsigned>(k));
  for (const auto& a : f.zeros) acc -= a.pow(static_cast<unsigned>(k));
  return acc;
}

namespace {

std::mutex pstar_mu;
std::map<std::pair<int, int>, MultiPoly> pstar_memo;
std::map<std::pair<Partition, int>, MultiPoly> pstar_nu_memo;

}  // namespace

MultiPoly pstar_on_multirect(int k, int d) {
  {
    std::lock_guard lock(pstar_mu);
    auto it = pstar_memo.find({k, d});
    if (it != pstar_memo.end()) return it->second;
  }
  // Rows P_{s-1}+1 .. P_s have length q_s. Expanding (c - i)^k in powers of i
  // turns each row interval into differences of Faulhaber polynomials.
  MultiPoly total(d);
  const MultiPoly half = MultiPoly::constant(d, RatAlpha(Rational(1, 2)));
  for (int s = 1; s <= d; ++s) {
    MultiPoly A = alpha_times(q_suffix(d, s)) + half;
    MultiPoly hi = p_prefix(d, s), lo = p_prefix(d, s - 1);
    std::vector<MultiPoly> apow{MultiPoly::constant(d, 1)};
    for (int t = 1; t <= k; ++t) apow.push_back(apow.back() * A);
    for (int j = 0; j <= k; ++j) {
      UPoly S = faulhaber(static_cast<unsigned>(j));
      MultiPoly range = eval_upoly(S, hi) - eval_upoly(S, lo);
      Rational half_pow = 1;
      for (int t = 0; t < k - j; ++t) half_pow /= 2;
      MultiPoly diff = apow[k - j] - MultiPoly::constant(d, RatAlpha(half_pow));
      Rational c = Rational(binomial(k, j)) * (j % 2 ? -1 : 1);
      total += diff * range * RatAlpha(c);
    }
  }
  std::lock_guard lock(pstar_mu);
  pstar_memo.emplace(std::make_pair(k, d), total);
  return total;
}

MultiPoly pstar_on_multirect(const Partition& nu, int d) {
  {
    std::lock_guard lock(pstar_mu);
    auto it = pstar_nu_memo.find({nu, d});
    if (it != pstar_nu_memo.end()) return it->second;
  }
  MultiPoly acc = MultiPoly::constant(d, 1);
  for (int part : nu.parts()) acc *= pstar_on_multirect(part, d);
  std::lock_guard lock(pstar_mu);
  pstar_nu_memo.emplace(std::make_pair(nu, d), acc);
  return acc;
}

namespace {

bool is_zero_value(const RatAlpha& x) { return x.is_zero(); }
bool is_zero_value(const Rational& x) { return x == 0; }

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> invert(Matrix<K> a) {
  const std::size_t n = a.size();
  Matrix<K> inv(n, std::vector<K>(n, K(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = K(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero_value(a[piv][col])) ++piv;
    if (piv == n) throw SingularSystem("singular block of size " + std::to_string(n));
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    K s = K(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * s;
      inv[col][j] = inv[col][j] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero_value(a[i][col])) continue;
      K f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero_value(a[col][j])) a[i][j] = a[i][j] - f * a[col][j];
        if (!is_zero_value(inv[col][j])) inv[i][j] = inv[i][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

struct SymbolicField {
  using K = RatAlpha;
  K from(const PolyAlpha& x) const { return RatAlpha(x); }
  K from(const RatAlpha& x) const { return x; }
  RatAlpha lift(const K& x) const { return x; }
  K pstar(const Partition& nu, const Partition& lambda) const { return p_star(nu, lambda); }
};

struct ValueField {
  using K = Rational;
  Rational q;
  K from(const PolyAlpha& x) const { return x.eval(q); }
  K from(const RatAlpha& x) const { return x.eval(q); }
  RatAlpha lift(const K& x) const { return RatAlpha(x); }
  K pstar(const Partition& nu, const Partition& lambda) const { return p_star(nu, lambda, q); }
};

// The evaluation matrix M[lambda][nu] = p*_nu(lambda), |lambda|, |nu| <= k,
// factors as E * C^T with E[lambda][rho] = Ch_rho(lambda). E vanishes when
// |lambda| < |rho| and C vanishes when |rho| > |nu|, so both factors are block
// triangular by size and M a = f is solved blockwise.
template <class Field>
class PStarSystem {
 public:
  using K = typename Field::K;

  PStarSystem(int k, Field field) : k_(k), field_(std::move(field)) {
    for (int j = 0; j <= k; ++j) {
      start_.push_back(static_cast<int>(basis_.size()));
      for (const Partition& p : partitions_of(j)) basis_.push_back(p);
    }
    start_.push_back(static_cast<int>(basis_.size()));
    const std::size_t n = basis_.size();
    E_.assign(n, std::vector<K>(n, K(0)));
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r)
        if (basis_[r].size() <= basis_[l].size()) E_[l][r] = field_.from(ch(basis_[r], basis_[l]));
    for (int j = 0; j <= k; ++j) dinv_.push_back(invert(block(E_, j, j)));
    ct_.assign(n, std::vector<K>(n, K(0)));
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<K> vals(n);
      for (std::size_t l = 0; l < n; ++l) vals[l] = field_.pstar(basis_[v], basis_[l]);
      auto c = ch_coeffs(vals);
      for (std::size_t r = 0; r < n; ++r) ct_[r][v] = c[r];
    }
    for (int j = 0; j <= k; ++j) ctinv_.push_back(invert(block(ct_, j, j)));
  }

  const std::vector<Partition>& basis() const { return basis_; }
  const Field& field() const { return field_; }

  std::vector<K> solve(const std::vector<K>& f) const {
    auto c = ch_coeffs(f);
    std::vector<K> a(basis_.size(), K(0));
    for (int j = k_; j >= 0; --j) {
      std::vector<K> rhs;
      for (int r = start_[j]; r < start_[j + 1]; ++r) {
        K acc = c[r];
        for (int v = start_[j + 1]; v < static_cast<int>(basis_.size()); ++v)
          if (!is_zero_value(ct_[r][v]) && !is_zero_value(a[v])) acc = acc - ct_[r][v] * a[v];
        rhs.push_back(acc);
      }
      auto x = apply(ctinv_[j], rhs);
      for (int r = start_[j]; r < start_[j + 1]; ++r) a[r] = x[r - start_[j]];
    }
    return a;
  }

 private:
  Matrix<K> block(const Matrix<K>& m, int bi, int bj) const {
    Matrix<K> out;
    for (int i = start_[bi]; i < start_[bi + 1]; ++i)
      out.emplace_back(m[i].begin() + start_[bj], m[i].begin() + start_[bj + 1]);
    return out;
  }

  static std::vector<K> apply(const Matrix<K>& m, const std::vector<K>& x) {
    std::vector<K> y(m.size(), K(0));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!is_zero_value(m[i][j]) && !is_zero_value(x[j])) y[i] = y[i] + m[i][j] * x[j];
    return y;
  }

  // Coefficients of f in the Ch basis (block forward substitution).
  std::vector<K> ch_coeffs(const std::vector<K>& f) const {
    std::vector<K> c(basis_.size(), K(0));
    for (int j = 0; j <= k_; ++j) {
      std::vector<K> rhs;
      for (int l = start_[j]; l < start_[j + 1]; ++l) {
        K acc = f[l];
        for (int r = 0; r < start_[j]; ++r)
          if (!is_zero_value(E_[l][r]) && !is_zero_value(c[r])) acc = acc - E_[l][r] * c[r];
        rhs.push_back(acc);
      }
      auto x = apply(dinv_[j], rhs);
      for (int r = start_[j]; r < start_[j + 1]; ++r) c[r] = x[r - start_[j]];
    }
    return c;
  }

  int k_;
  Field field_;
  std::vector<Partition> basis_;
  std::vector<int> start_;
  Matrix<K> E_;
  std::vector<Matrix<K>> dinv_;
  Matrix<K> ct_;
  std::vector<Matrix<K>> ctinv_;
};

std::mutex system_mu;
std::map<int, std::shared_ptr<const PStarSystem<SymbolicField>>> symbolic_systems;
std::map<std::pair<int, Rational>, std::shared_ptr<const PStarSystem<ValueField>>> value_systems;

std::shared_ptr<const PStarSystem<SymbolicField>> symbolic_system(int k) {
  std::lock_guard lock(system_mu);
  auto& slot = symbolic_systems[k];
  if (!slot) slot = std::make_shared<PStarSystem<SymbolicField>>(k, SymbolicField{});
  return slot;
}

std::shared_ptr<const PStarSystem<ValueField>> value_system(int k, const Rational& q) {
  std::lock_guard lock(system_mu);
  auto& slot = value_systems[{k, q}];
  if (!slot) slot = std::make_shared<PStarSystem<ValueField>>(k, ValueField{q});
  return slot;
}

AlphaMode resolve_mode(const DiagramFunction& F, const AlphaMode& alpha) {
  if (F.alpha && alpha && *F.alpha != *alpha)
    throw InvalidArgument(F.name + " is only defined at alpha = " + to_string(*F.alpha));
  return F.alpha ? F.alpha : alpha;
}

template <class Field>
PStarExpansion expand_with(const PStarSystem<Field>& sys, const DiagramFunction& F, int k,
                           const AlphaMode& mode) {
  using K = typename Field::K;
  const auto& field = sys.field();
  const auto& basis = sys.basis();
  std::vector<K> f;
  for (const Partition& lam : basis) f.push_back(field.from(F.eval(lam)));
  auto a = sys.solve(f);
  PStarExpansion out{k, mode, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!is_zero_value(a[i])) out.coeffs.emplace(basis[i], field.lift(a[i]));
  for (int n = k + 1; n <= k + 2; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      K lhs(0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (!is_zero_value(a[i])) lhs = lhs + a[i] * field.pstar(basis[i], lam);
      if (!(lhs == field.from(F.eval(lam))))
        throw DegreeGuardFailed(F.name + " disagrees with its degree-" + std::to_string(k) +
                                " expansion at " + lam.to_string());
    }
  }
  return out;
}

}  // namespace

RatAlpha PStarExpansion::eval(const Partition& lambda) const {
  RatAlpha acc;
  for (const auto& [nu, c] : coeffs) {
    if (alpha) acc += c * RatAlpha(p_star(nu, lambda, *alpha));
    else acc += c * p_star(nu, lambda);
  }
  return acc;
}

PStarExpansion expand_in_pstar(const DiagramFunction& F, int k, const AlphaMode& alpha) {
  if (k < 0) throw InvalidArgument("negative degree bound");
  AlphaMode mode = resolve_mode(F, alpha);
  if (mode) return expand_with(*value_system(k, *mode), F, k, mode);
  return expand_with(*symbolic_system(k), F, k, mode);
}

MultiPoly reconstruct_multirect(const DiagramFunction& F, int k, int d, const AlphaMode& alpha) {
  PStarExpansion e = expand_in_pstar(F, k, alpha);
  if (e.alpha) {
    MultiPoly G(d);
    for (const auto& [nu, c] : e.coeffs) G += pstar_on_multirect(nu, d).specialize_alpha(*e.alpha) * c;
    return G;
  }
  PolyAlpha D = 1;
  for (const auto& [nu, c] : e.coeffs) {
    if (c.is_polynomial()) continue;
    D = PolyAlpha::exact_div(D * c.den(), gcd(D, c.den()));
  }
  MultiPoly G(d);
  for (const auto& [nu, c] : e.coeffs) {
    PolyAlpha scaled = c.num() * PolyAlpha::exact_div(D, c.den());
    G += pstar_on_multirect(nu, d) * RatAlpha(scaled);
  }
  if (D.is_one()) return G;
  MultiPoly out(d);
  for (const auto& [ex, c] : G.terms()) {
    RatAlpha v = c / RatAlpha(D);
    if (!v.is_polynomial())
      throw DenominatorNotCleared(F.name + ": coefficient " + v.to_string() + " of " + exponent_to_string(ex, d));
    out.add_term(ex, v);
  }
  return out;
}

Rational shifted_schur(const Partition& mu, const Partition& lambda, int extra_rows) {
  if (!contains(lambda, mu)) return 0;
  const int n = std::max(lambda.length(), mu.length()) + extra_rows;
  auto det = [n](std::vector<std::vector<Rational>> a) {
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (piv < n && a[piv][c] == 0) ++piv;
      if (piv == n) return Rational(0);
      if (piv != c) {
        std::swap(a[piv], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (int i = c + 1; i < n; ++i) {
        if (a[i][c] == 0) continue;
        Rational f = a[i][c] / a[c][c];
        for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      }
    }
    return d;
  };
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den = num;
  for (int i = 1; i <= n; ++i) {
    Rational x = lambda.part(i) + n - i;
    for (int j = 1; j <= n; ++j) {
      num[i - 1][j - 1] = falling(x, static_cast<unsigned>(mu.part(j) + n - j));
      den[i - 1][j - 1] = falling(x, static_cast<unsigned>(n - j));
    }
  }
  return det(num) / det(den);
}

RatAlpha shifted_jack(const Partition& mu, const Partition& lambda) {
  const int k = mu.size();
  PolyAlpha num;
  for (const Partition& nu : partitions_of(k)) {
    PolyAlpha t = theta(nu, mu);
    if (t.is_zero()) continue;
    PolyAlpha c = ch(nu, lambda);
    if (c.is_zero()) continue;
    num += t * c * PolyAlpha::monomial(1, static_cast<std::size_t>(nu.length()));
  }
  return RatAlpha(num, PolyAlpha::monomial(1, static_cast<std::size_t>(k)));
}

Rational ko_via_shifted_schur(const Partition& mu, const Partition& lambda) {
  Rational acc = 0;
  for (const Partition& nu : partitions_of(mu.size())) {
    Integer K = kostka(nu, mu);
    if (K != 0) acc += Rational(K) * shifted_schur(nu, lambda);
  }
  return acc;
}

DiagramFunction ch_function(const Partition& mu) {
  return {"Ch" + mu.to_string(), mu.size(), [mu](const Partition& l) { return RatAlpha(ch(mu, l)); }, {}};
}

DiagramFunction ko_function(const Partition& mu) {
  return {"Ko" + mu.to_string(), mu.size(), [mu](const Partition& l) { return RatAlpha(ko(mu, l)); }, {}};
}

DiagramFunction shifted_jack_function(const Partition& mu) {
  return {"J*" + mu.to_string(), mu.size(), [mu](const Partition& l) { return shifted_jack(mu, l); }, {}};
}

DiagramFunction scaled_shifted_jack_function(const Partition& mu) {
  RatAlpha scale = RatAlpha::alpha_pow(mu.size() - mu.part(1));
  return {"alpha^" + std::to_string(mu.size() - mu.part(1)) + "*J*" + mu.to_string(), mu.size(),
          [mu, scale](const Partition& l) { return shifted_jack(mu, l) * scale; }, {}};
}

DiagramFunction shifted_schur_function(const Partition& mu) {
  return {"S*" + mu.to_string(), mu.size(),
          [mu](const Partition& l) { return RatAlpha(shifted_schur(mu, l)); }, Rational(1)};
}

DiagramFunction ch1_character_function(const Partition& mu) {
  return {"Ch1" + mu.to_string(), mu.size(),
          [mu](const Partition& l) {
            const int n = l.size(), k = mu.size();
            if (n < k) return RatAlpha();
            Rational v = falling(n, static_cast<unsigned>(k)) *
                         Rational(character(l, mu.with_parts(1, n - k))) / Rational(syt_count(l));
            return RatAlpha(v);
          },
          Rational(1)};
}

DiagramFunction pstar_function(const Partition& nu) {
  return {"p*" + nu.to_string(), nu.size(), [nu](const Partition& l) { return p_star(nu, l); }, {}};
}

DiagramFunction ptheta_function(int k) {
  return {"ptheta" + std::to_string(k), std::max(k - 1, 0),
          [k](const Partition& l) { return p_theta(k, l); }, {}};
}

}  // namespace jackpos
