#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackpos/combinatorics.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/falling_factorial.hpp"
#include "jackpos/hooktab.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/shifted.hpp"
#include "jackpos/stanley.hpp"
#include "jackpos/symfun.hpp"
#include "jackpos/zonal.hpp"

using namespace jackpos;
using json = nlohmann::json;

namespace {

// Raised for requests that are well-formed but outside the safe limits.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int jobs = 1;
  bool unbounded = false;
  std::string alpha;
  std::string mu;
  std::string shape;
  std::string function = "ko";
  std::string tableau;
  std::string map;
  int k = 2;
  int d = 2;
  int n = 4;
  int max_size = -1;
  bool alpha_symbolic = false;
  bool ff = false;
  bool perturb = false;

  bool json() const { return format == "json"; }
  AlphaMode alpha_mode() const {
    if (alpha.empty()) return {};
    return parse_rational(alpha);
  }
  Partition partition() const {
    if (mu.empty()) throw UsageError("--mu is required");
    return parse_partition(mu);
  }
};

void require(bool ok, const Options& o, const std::string& what) {
  if (!ok && !o.unbounded) throw UsageError(what + " exceeds the default limits; pass --unbounded");
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Work items are evaluated by a pool of o.jobs threads; results keep their index,
// so the output never depends on scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int jobs, F f) {
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

struct Row {
  std::string label;
  bool pass = true;
  std::vector<std::string> witnesses;
};

int report(const Options& o, const std::string& command, const std::vector<Row>& rows, json extra = json::object()) {
  bool pass = true;
  for (const Row& r : rows) pass = pass && r.pass;
  json j = std::move(extra);
  j["command"] = command;
  j["status"] = pass ? "PASS" : "FAIL";
  json arr = json::array();
  std::string text;
  for (const Row& r : rows) {
    arr.push_back({{"check", r.label}, {"status", r.pass ? "PASS" : "FAIL"}, {"witnesses", r.witnesses}});
    text += std::string(r.pass ? "PASS  " : "FAIL  ") + r.label + "\n";
    for (const auto& w : r.witnesses) text += "      " + w + "\n";
  }
  j["checks"] = arr;
  text += command + ": " + (pass ? "PASS" : "FAIL") + " (" + std::to_string(rows.size()) + " checks)\n";
  emit(o, j, text);
  return pass ? 0 : 1;
}

std::vector<std::string> ff_witnesses(const Certificate& c, int d) {
  std::vector<std::string> out;
  for (const auto& [key, v] : c.witnesses) out.push_back(to_string(key, d) + " : " + to_string(v));
  return out;
}

// Flips the sign of the first coefficient (or plants -1 in an empty expansion).
FFExpansion perturbed(const FFExpansion& F) {
  FFExpansion out(F.dim());
  bool done = false;
  for (const auto& [key, c] : F.terms()) {
    out.add(key, done ? c : -c);
    done = true;
  }
  if (!done) out.add({0, Exponent(2 * F.dim(), 0)}, -1);
  return out;
}

MultiPoly perturbed(const MultiPoly& P) {
  MultiPoly out = P;
  out.add_term(Exponent(2 * P.dim(), 0), 1);
  return out;
}

std::string coeff_text(const RatAlpha& c, const AlphaMode& a) {
  return a ? to_string(c.eval(*a)) : c.to_string();
}

json poly_json(const MultiPoly& P) {
  if (P.has_polynomial_coefficients()) return to_json(P);
  json arr = json::array();
  for (const auto& [e, c] : P.terms()) arr.push_back({{"monomial", exponent_to_string(e, P.dim())}, {"coeff", c.to_string()}});
  return arr;
}

DiagramFunction make_function(const Options& o) {
  const std::string& f = o.function;
  if (f == "ptheta") return ptheta_function(o.k);
  Partition mu = o.partition();
  if (f == "ch") return ch_function(mu);
  if (f == "ch1") return ch1_character_function(mu);
  if (f == "ko") return ko_function(mu);
  if (f == "jstar") return shifted_jack_function(mu);
  if (f == "jstar-scaled") return scaled_shifted_jack_function(mu);
  if (f == "sstar") return shifted_schur_function(mu);
  if (f == "pstar") return pstar_function(mu);
  throw UsageError("unknown function '" + f + "'");
}

// ---- jack ----

int cmd_jack_expand(const Options& o) {
  Partition l = o.shape.empty() ? o.partition() : parse_partition(o.shape);
  require(l.size() <= 8, o, "shape size > 8");
  AlphaMode a = o.alpha_mode();
  json j{{"shape", to_json(l)}};
  std::string text;
  for (auto [name, e] : {std::pair{"monomial", jack_monomial(l)}, std::pair{"powersum", jack_powersum(l)}}) {
    json arr = json::array();
    text += std::string("J") + l.to_string() + " " + name + ":\n";
    for (const auto& [tau, c] : e.coeffs) {
      arr.push_back({{"tau", to_json(tau)}, {"coeff", coeff_text(c, a)}});
      text += "  " + std::string(name[0] == 'm' ? "m" : "p") + tau.to_string() + ": " + coeff_text(c, a) + "\n";
    }
    j[name] = arr;
  }
  emit(o, j, text);
  return 0;
}

int cmd_jack_tables(const Options& o) {
  require(o.n <= 8, o, "n > 8");
  if (o.n < 0) throw UsageError("n must be nonnegative");
  const auto& ps = partitions_of(o.n);
  json chars = json::array(), kost = json::array();
  std::string text = "characters chi^lambda_tau, n=" + std::to_string(o.n) + "\n";
  for (const Partition& l : ps)
    for (const Partition& t : ps) {
      Integer c = character(l, t);
      chars.push_back({{"lambda", to_json(l)}, {"tau", to_json(t)}, {"value", to_string(c)}});
      text += "  " + l.to_string() + " " + t.to_string() + ": " + to_string(c) + "\n";
    }
  text += "Kostka K^lambda_tau, n=" + std::to_string(o.n) + "\n";
  for (const Partition& l : ps)
    for (const Partition& t : ps) {
      Integer c = kostka(l, t);
      kost.push_back({{"lambda", to_json(l)}, {"tau", to_json(t)}, {"value", to_string(c)}});
      text += "  " + l.to_string() + " " + t.to_string() + ": " + to_string(c) + "\n";
    }
  emit(o, {{"n", o.n}, {"characters", chars}, {"kostka", kost}}, text);
  return 0;
}

// ---- shifted / reconstruct ----

int cmd_shifted_eval(const Options& o) {
  DiagramFunction F = make_function(o);
  if (o.shape.empty()) throw UsageError("--shape is required");
  Partition l = parse_partition(o.shape);
  AlphaMode a = o.alpha_mode();
  if (F.alpha && a && *F.alpha != *a) throw UsageError(F.name + " is only defined at alpha = " + to_string(*F.alpha));
  RatAlpha v = F.eval(l);
  std::string s = coeff_text(v, a ? a : F.alpha);
  emit(o, {{"function", F.name}, {"shape", to_json(l)}, {"value", s}}, F.name + "(" + l.to_string() + ") = " + s + "\n");
  return 0;
}

int cmd_shifted_expand(const Options& o) {
  DiagramFunction F = make_function(o);
  require(F.degree <= 6, o, "degree > 6");
  PStarExpansion e = expand_in_pstar(F, F.degree, o.alpha_mode());
  json arr = json::array();
  std::string text = F.name + " in the p* basis:\n";
  for (const auto& [nu, c] : e.coeffs) {
    arr.push_back({{"nu", to_json(nu)}, {"coeff", c.to_string()}});
    text += "  p*" + nu.to_string() + ": " + c.to_string() + "\n";
  }
  emit(o, {{"function", F.name}, {"degree", F.degree}, {"expansion", arr}}, text);
  return 0;
}

int cmd_reconstruct(const Options& o) {
  if (o.alpha_symbolic && !o.alpha.empty()) throw UsageError("--alpha-symbolic conflicts with --alpha");
  DiagramFunction F = make_function(o);
  require(F.degree <= 6 && o.d <= 3, o, "degree > 6 or d > 3");
  if (o.d < 1) throw UsageError("d must be positive");
  MultiPoly P = reconstruct_multirect(F, F.degree, o.d, o.alpha_mode());
  json j{{"function", F.name}, {"d", o.d}, {"polynomial", poly_json(P)}};
  std::string text = F.name + "(r^p), d=" + std::to_string(o.d) + ":\n  " + P.to_string() + "\n";
  int rc = 0;
  if (o.ff) {
    FFExpansion E = to_falling_factorial(P);
    Certificate c = is_nonnegative(E);
    j["ff"] = to_json(E);
    j["certificate"] = to_json(c, o.d);
    text += "falling factorial basis:\n  " + E.to_string() + "\ncertificate: " + (c.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& w : ff_witnesses(c, o.d)) text += "  witness " + w + "\n";
    rc = c.pass ? 0 : 1;
  }
  emit(o, j, text);
  return rc;
}

// ---- stanley ----

int cmd_stanley_poly(const Options& o, const std::string& which) {
  Partition mu = o.partition();
  require(mu.size() <= 6 && o.d <= 3, o, "|mu| > 6 or d > 3");
  if (o.d < 1) throw UsageError("d must be positive");
  MultiPoly P = which == "ch" ? ch1_multirect(mu, o.d) : which == "sstar" ? shifted_schur_multirect(mu, o.d)
                                                                           : ko_multirect_sym(mu, o.d);
  json j{{"function", which}, {"mu", to_json(mu)}, {"d", o.d}, {"polynomial", poly_json(P)}};
  std::string text = which + mu.to_string() + "(r^p), d=" + std::to_string(o.d) + ":\n  " + P.to_string() + "\n";
  int rc = 0;
  if (which == "ch") {
    MultiPoly Q = to_p_minus_q(P, mu.size());
    bool ok = nonnegative_coefficients(Q);
    j["p_minus_q"] = poly_json(Q);
    j["p_minus_q_nonnegative"] = ok;
    text += "(-1)^k Ch in (p, -q), q stored in the r slots:\n  " + Q.to_string() + "\nnonnegative: " +
            (ok ? "PASS" : "FAIL") + "\n";
    rc = ok ? 0 : 1;
  } else {
    Certificate c = is_nonnegative(to_falling_factorial(P));
    j["certificate"] = to_json(c, o.d);
    text += std::string("falling factorial certificate: ") + (c.pass ? "PASS" : "FAIL") + "\n";
    rc = c.pass ? 0 : 1;
  }
  emit(o, j, text);
  return rc;
}

int cmd_stanley_verify_b(const Options& o) {
  require(o.k <= 5, o, "k > 5");
  std::vector<Row> rows;
  for (int k = 1; k <= o.k; ++k) {
    auto sps = all_set_partitions(k);
    const auto& mus = partitions_of(k);
    auto per_mu = parallel_map<Row>(mus.size(), o.jobs, [&](std::size_t i) {
      Row r{"B^" + mus[i].to_string() + "_{S,T} >= 0 over " + std::to_string(sps.size() * sps.size()) + " pairs"};
      for (const auto& S : sps)
        for (const auto& T : sps) {
          Integer b = b_coeff(mus[i], S, T);
          if (b < 0) {
            r.pass = false;
            r.witnesses.push_back("S=" + S.to_string() + " T=" + T.to_string() + " B=" + to_string(b));
          }
        }
      return r;
    });
    rows.insert(rows.end(), per_mu.begin(), per_mu.end());
  }
  return report(o, "stanley verify-b", rows, {{"k", o.k}});
}

int cmd_stanley_question(const Options& o) {
  require(o.k <= 6, o, "k >= 7");
  EnumerationLimits lim;
  lim.unbounded = o.unbounded;
  const int k = o.k;
  auto sps = all_set_partitions(k, lim);
  // For each (S, T): signed counts of sigma tau by its cycle partition.
  auto tables = parallel_map<std::map<SetPartition, long>>(sps.size() * sps.size(), o.jobs, [&](std::size_t idx) {
    const SetPartition& S = sps[idx / sps.size()];
    const SetPartition& T = sps[idx % sps.size()];
    std::map<SetPartition, long> m;
    auto GS = young_subgroup(S), GT = young_subgroup(T);
    for (const auto& s : GS)
      for (const auto& t : GT) m[cycles(s * t)] += t.sign();
    return m;
  });
  long triples = 0, negatives = 0, minimum = 0;
  bool first = true;
  Row r{"question sum >= 0 for all (S,T,U) on [" + std::to_string(k) + "]"};
  for (std::size_t idx = 0; idx < tables.size(); ++idx)
    for (const auto& U : sps) {
      long s = 0;
      for (const auto& [C, v] : tables[idx])
        if (C.refines(U)) s += v;
      ++triples;
      if (first || s < minimum) minimum = s, first = false;
      if (s < 0) {
        ++negatives;
        r.pass = false;
        if (r.witnesses.size() < 20)
          r.witnesses.push_back("S=" + sps[idx / sps.size()].to_string() + " T=" + sps[idx % sps.size()].to_string() +
                                " U=" + U.to_string() + " sum=" + std::to_string(s));
      }
    }
  return report(o, "stanley question35", {r},
                {{"k", k}, {"triples", triples}, {"negatives", negatives}, {"minimum", minimum}});
}

// ---- zonal ----

int cmd_zonal_poly(const Options& o, const std::string& which) {
  Partition mu = o.partition();
  require(mu.size() <= 4 && o.d <= 3, o, "|mu| > 4 or d > 3");
  if (o.d < 1) throw UsageError("d must be positive");
  MultiPoly P = which == "zstar" ? zstar_multirect(mu, o.d) : which == "ch2" ? ch2_multirect(mu, o.d)
                                                                             : ko2_multirect(mu, o.d);
  emit(o, {{"function", which}, {"mu", to_json(mu)}, {"d", o.d}, {"alpha", "2"}, {"polynomial", poly_json(P)}},
       which + mu.to_string() + "(r^p) at alpha=2, d=" + std::to_string(o.d) + ":\n  " + P.to_string() + "\n");
  return 0;
}

int cmd_zonal_census(const Options& o) {
  require(o.k <= 5, o, "k > 5");
  auto census = pair_type_census(o.k);
  std::vector<Row> rows;
  for (const Partition& nu : partitions_of(o.k)) {
    Integer expected = pair_type_count(nu);
    Row r{"type " + nu.to_string() + ": " + to_string(census[nu]) + " pairs"};
    if (census[nu] != expected) {
      r.pass = false;
      r.witnesses.push_back("expected " + to_string(expected));
    }
    rows.push_back(r);
  }
  return report(o, "zonal census", rows, {{"k", o.k}});
}

// ---- hooktab ----

Row bijection_row(const Partition& l, int k) {
  Row r{"lambda=" + l.to_string() + " k=" + std::to_string(k)};
  auto fail = [&r](const std::string& w) {
    r.pass = false;
    if (r.witnesses.size() < 10) r.witnesses.push_back(w);
  };
  PolyAlpha ht, pt;
  std::set<std::string> images;
  long nh = 0, np = 0;
  for_each_hook_tableau(l, k, [&](const HookTableau& T) {
    PermutedTableau P = psi(T);
    if (!P.is_valid()) fail("psi image invalid: " + T.to_string());
    if (P.weight() != T.weight()) fail("weight changed: " + T.to_string());
    if (phi(P) != T) fail("phi(psi(T)) != T: " + T.to_string());
    images.insert(P.to_string());
    ht += T.weight();
    ++nh;
  });
  for_each_permuted_tableau(l, k, [&](const PermutedTableau& P) {
    if (psi(phi(P)) != P) fail("psi(phi(P)) != P: " + P.to_string());
    pt += P.weight();
    ++np;
  });
  if (static_cast<long>(images.size()) != nh || nh != np) fail("family sizes differ");
  PolyAlpha cd = ko_onepart_subsets(k, l), ks = ko(Partition{k}, l);
  if (!(ht == pt && pt == cd && cd == ks))
    fail("HT " + ht.to_string() + " PT " + pt.to_string() + " subsets " + cd.to_string() + " Knop-Sahi " + ks.to_string());
  r.label += " (" + std::to_string(nh) + " tableaux)";
  return r;
}

int cmd_hooktab_verify(const Options& o) {
  int n = o.max_size < 0 ? 6 : o.max_size;
  require(n <= 6, o, "max-size > 6");
  std::vector<std::pair<Partition, int>> work;
  for (const Partition& l : partitions_up_to(n))
    for (int k = 1; k <= std::min(4, l.size()); ++k) work.emplace_back(l, k);
  auto rows = parallel_map<Row>(work.size(), o.jobs, [&](std::size_t i) { return bijection_row(work[i].first, work[i].second); });
  return report(o, "hooktab verify", rows, {{"max_size", n}});
}

int cmd_hooktab_ff(const Options& o) {
  require(o.k <= 7 && o.d <= 3, o, "k > 7 or d > 3");
  FFExpansion F = ko_onepart_ff(o.k, o.d);
  if (o.perturb) F = perturbed(F);
  Certificate c = is_nonnegative(F);
  std::string text = "Ko_(" + std::to_string(o.k) + ")(r^p), d=" + std::to_string(o.d) + ", skeleton expansion:\n  " +
                     F.to_string() + "\ncertificate: " + (c.pass ? "PASS" : "FAIL") + "\n";
  for (const auto& w : ff_witnesses(c, o.d)) text += "  witness " + w + "\n";
  emit(o, {{"k", o.k}, {"d", o.d}, {"ff", to_json(F)}, {"certificate", to_json(c, o.d)}}, text);
  return c.pass ? 0 : 1;
}

int cmd_hooktab_trace(const Options& o) {
  if (o.tableau.empty()) throw UsageError("--tableau is required");
  std::string m = o.map;
  if (m.empty()) m = o.tableau.find('*') != std::string::npos ? "psi" : "phi";
  std::vector<TraceStep> steps;
  std::string out;
  if (m == "psi") {
    HookTableau T = parse_hook_tableau(o.tableau);
    out = psi(T, &steps).to_string();
  } else if (m == "phi") {
    PermutedTableau T = parse_permuted_tableau(o.tableau);
    if (!T.is_valid()) throw UsageError("not a permuted tableau: " + o.tableau);
    out = phi(T, &steps).to_string();
  } else {
    throw UsageError("--map must be psi or phi");
  }
  json arr = json::array();
  std::string text;
  for (const auto& s : steps) {
    arr.push_back({{"rule", s.rule}, {"state", s.state}});
    text += s.rule + std::string(6 - std::min<std::size_t>(5, s.rule.size()), ' ') + s.state + "\n";
  }
  text += "result " + out + "\n";
  emit(o, {{"map", m}, {"input", o.tableau}, {"steps", arr}, {"output", out}}, text);
  return 0;
}

// ---- harnesses ----

int cmd_verify_conjecture(const Options& o) {
  int n = o.max_size < 0 ? 5 : o.max_size;
  require(o.d <= 3 && n <= 6 && (o.d < 3 || n <= 5), o, "max-size/d");
  if (o.d < 1) throw UsageError("d must be positive");
  std::vector<Partition> mus;
  for (int k = 1; k <= n; ++k)
    for (const Partition& mu : partitions_of(k)) mus.push_back(mu);
  const int d = o.d;
  auto rows = parallel_map<Row>(mus.size(), o.jobs, [&](std::size_t i) {
    const Partition& mu = mus[i];
    const int k = mu.size();
    Row r{"mu=" + mu.to_string() + " d=" + std::to_string(d)};
    FFExpansion J = to_falling_factorial(reconstruct_multirect(scaled_shifted_jack_function(mu), k, d));
    MultiPoly Kp = reconstruct_multirect(ko_function(mu), k, d);
    FFExpansion K = to_falling_factorial(Kp);
    if (o.perturb && i == 0) J = perturbed(J);
    Certificate cj = is_nonnegative(J), ck = is_nonnegative(K);
    for (const auto& w : ff_witnesses(cj, d)) r.witnesses.push_back("alpha^" + std::to_string(k - mu.part(1)) + "*J* " + w);
    for (const auto& w : ff_witnesses(ck, d)) r.witnesses.push_back("Ko " + w);
    r.pass = cj.pass && ck.pass;
    r.label += std::string(" J*: ") + (cj.pass ? "PASS" : "FAIL") + " Ko: " + (ck.pass ? "PASS" : "FAIL");
    if (mu.length() == 1) {
      bool same = from_falling_factorial(ko_onepart_ff(k, d)) == Kp;
      r.label += std::string(" skeleton: ") + (same ? "PASS" : "FAIL");
      if (!same) {
        r.pass = false;
        r.witnesses.push_back("skeleton expansion differs from the reconstruction");
      }
    }
    return r;
  });
  return report(o, "verify-conjecture", rows, {{"max_size", n}, {"d", d}});
}

int cmd_crossval(const Options& o) {
  int n = o.max_size < 0 ? 4 : o.max_size;
  require(n <= 5 && o.d <= 2, o, "max-size > 5 or d > 2");
  if (o.d < 0) throw UsageError("d must be nonnegative");
  const int d = o.d;
  using Check = std::function<Row()>;
  std::vector<Check> checks;
  auto equal_row = [](std::string label, const MultiPoly& a, const MultiPoly& b) {
    Row r{std::move(label)};
    if (!(a == b)) {
      r.pass = false;
      MultiPoly diff = a - b;
      r.witnesses.push_back("difference " + diff.to_string());
    }
    return r;
  };
  if (d >= 1) {
    for (int k = 1; k <= n; ++k)
      for (const Partition& mu : partitions_of(k)) {
        std::string t = mu.to_string() + " d=" + std::to_string(d);
        checks.push_back([=] {
          MultiPoly a = ch1_multirect(mu, d);
          if (o.perturb && k == 1) a = perturbed(a);
          return equal_row("alpha=1 Ch " + t + ": N-formula = reconstruction", a,
                           reconstruct_multirect(ch1_character_function(mu), k, d));
        });
        checks.push_back([=] {
          return equal_row("alpha=1 S* " + t + ": N-formula = reconstruction", shifted_schur_multirect(mu, d),
                           reconstruct_multirect(shifted_schur_function(mu), k, d, Rational(1)));
        });
        checks.push_back([=] {
          return equal_row("alpha=1 Ko " + t + ": N-formula = reconstruction", ko_multirect_sym(mu, d),
                           reconstruct_multirect(ko_function(mu), k, d, Rational(1)));
        });
        if (k <= 3) {
          checks.push_back([=] {
            return equal_row("alpha=2 Ch " + t + ": pair formula = reconstruction", ch2_multirect(mu, d),
                             reconstruct_multirect(ch_function(mu), k, d, Rational(2)));
          });
          checks.push_back([=] {
            return equal_row("alpha=2 J* " + t + ": pair formula = reconstruction", zstar_multirect(mu, d),
                             reconstruct_multirect(shifted_jack_function(mu), k, d, Rational(2)));
          });
          checks.push_back([=] {
            return equal_row("alpha=2 Ko " + t + ": pair formula = reconstruction", ko2_multirect(mu, d),
                             reconstruct_multirect(ko_function(mu), k, d, Rational(2)));
          });
        }
        checks.push_back([=] {
          // reconstruction vs direct evaluation on every diagram with at most d blocks and <= 7 boxes
          MultiPoly P = reconstruct_multirect(ko_function(mu), k, d);
          Row r{"Ko " + t + ": reconstruction = direct evaluation"};
          for (const Partition& l : partitions_up_to(7)) {
            MultiRect m;
            try {
              m = from_partition(l, d);
            } catch (const TooManyBlocks&) {
              continue;
            }
            std::vector<Rational> p(m.p.begin(), m.p.end()), rr(m.r.begin(), m.r.end());
            if (P.eval(p, rr) != RatAlpha(ko(mu, l))) {
              r.pass = false;
              r.witnesses.push_back("at " + l.to_string());
            }
          }
          return r;
        });
      }
    for (int k = 1; k <= n; ++k)
      checks.push_back([=] {
        return equal_row("Ko_(" + std::to_string(k) + ") d=" + std::to_string(d) + ": skeleton = reconstruction",
                         from_falling_factorial(ko_onepart_ff(k, d)), reconstruct_multirect(ko_function(Partition{k}), k, d));
      });
    for (const Partition& l : partitions_up_to(n + 1))
      for (int k = 1; k <= std::min(4, l.size()); ++k)
        checks.push_back([=] {
          Row r = bijection_row(l, k);
          r.label = "four-way Ko_(k) and bijection " + r.label;
          return r;
        });
  }
  auto rows = parallel_map<Row>(checks.size(), o.jobs, [&](std::size_t i) { return checks[i](); });
  return report(o, "crossval", rows, {{"max_size", n}, {"d", d}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack characters, shifted symmetric functions and positivity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--unbounded", o.unbounded, "Lift the default size limits");
  app.add_option("--alpha", o.alpha, "Specialize alpha to a rational value");

  auto add_mu = [&o](CLI::App* c) { return c->add_option("--mu", o.mu, "Partition, e.g. 2,1"); };
  auto add_d = [&o](CLI::App* c) { return c->add_option("--d", o.d, "Number of rectangles")->check(CLI::Range(0, 8)); };
  auto add_k = [&o](CLI::App* c) { return c->add_option("--k", o.k, "Size parameter")->check(CLI::Range(0, 20)); };
  auto add_max = [&o](CLI::App* c) {
    return c->add_option("--max-size", o.max_size, "Largest size")->check(CLI::Range(0, 20));
  };
  const std::vector<std::string> functions = {"ch", "ch1", "ko", "jstar", "jstar-scaled", "sstar", "pstar", "ptheta"};

  std::function<int()> action;

  auto* jack = app.add_subcommand("jack", "Jack polynomials and classical tables");
  jack->require_subcommand(1);
  auto* jack_expand = jack->add_subcommand("expand", "Monomial and power-sum expansions of J_lambda");
  jack_expand->add_option("--shape", o.shape, "Partition lambda");
  add_mu(jack_expand);
  jack_expand->callback([&] { action = [&] { return cmd_jack_expand(o); }; });
  auto* jack_tables = jack->add_subcommand("tables", "Character and Kostka tables");
  jack_tables->add_option("--n", o.n, "Size")->check(CLI::Range(0, 20));
  jack_tables->callback([&] { action = [&] { return cmd_jack_tables(o); }; });

  auto* shifted = app.add_subcommand("shifted", "Shifted symmetric functions on diagrams");
  shifted->require_subcommand(1);
  auto* sh_eval = shifted->add_subcommand("eval", "Evaluate a function on a diagram");
  auto* sh_expand = shifted->add_subcommand("expand", "Expand a function in the p* basis");
  for (auto* c : {sh_eval, sh_expand}) {
    c->add_option("--function", o.function, "Function")->check(CLI::IsMember(functions));
    add_mu(c);
    add_k(c);
  }
  sh_eval->add_option("--shape", o.shape, "Diagram lambda")->required();
  sh_eval->callback([&] { action = [&] { return cmd_shifted_eval(o); }; });
  sh_expand->callback([&] { action = [&] { return cmd_shifted_expand(o); }; });

  auto* recon = app.add_subcommand("reconstruct", "Polynomial in multirectangular coordinates");
  recon->add_option("--function", o.function, "Function")->check(CLI::IsMember(functions));
  add_mu(recon);
  add_d(recon);
  add_k(recon);
  recon->add_flag("--alpha-symbolic", o.alpha_symbolic, "Keep alpha symbolic (default)");
  recon->add_flag("--ff", o.ff, "Also print the falling factorial expansion and certificate");
  recon->callback([&] { action = [&] { return cmd_reconstruct(o); }; });

  auto* stanley = app.add_subcommand("stanley", "alpha = 1 permutation formulas");
  stanley->require_subcommand(1);
  for (std::string which : {"ch", "sstar", "ko"}) {
    auto* c = stanley->add_subcommand(which, which + " through the N polynomials");
    add_mu(c);
    add_d(c);
    c->callback([&o, &action, which] { action = [&o, which] { return cmd_stanley_poly(o, which); }; });
  }
  auto* verify_b = stanley->add_subcommand("verify-b", "Nonnegativity of the B coefficients");
  add_k(verify_b);
  verify_b->callback([&] { action = [&] { return cmd_stanley_verify_b(o); }; });
  auto* q35 = stanley->add_subcommand("question35", "Search for negative signed sums over (S,T,U)");
  add_k(q35);
  q35->callback([&] { action = [&] { return cmd_stanley_question(o); }; });

  auto* zonal = app.add_subcommand("zonal", "alpha = 2 pair-partition formulas");
  zonal->require_subcommand(1);
  for (std::string which : {"zstar", "ch2", "ko2"}) {
    auto* c = zonal->add_subcommand(which, which + " through the pair-partition N polynomials");
    add_mu(c);
    add_d(c);
    c->callback([&o, &action, which] { action = [&o, which] { return cmd_zonal_poly(o, which); }; });
  }
  auto* census = zonal->add_subcommand("census", "Count pairs of pair-partitions by type");
  add_k(census);
  census->callback([&] { action = [&] { return cmd_zonal_census(o); }; });

  auto* hook = app.add_subcommand("hooktab", "Hook tableaux, permuted tableaux and the bijection");
  hook->require_subcommand(1);
  auto* hverify = hook->add_subcommand("verify", "Exhaustive bijection and weighted count checks");
  add_max(hverify);
  hverify->callback([&] { action = [&] { return cmd_hooktab_verify(o); }; });
  auto* hff = hook->add_subcommand("ff", "Skeleton expansion of Ko_(k)");
  add_k(hff);
  add_d(hff);
  hff->add_flag("--perturb", o.perturb, "Negative self-test: flip one coefficient");
  hff->callback([&] { action = [&] { return cmd_hooktab_ff(o); }; });
  auto* htrace = hook->add_subcommand("trace", "Step-by-step trace of psi or phi");
  htrace->add_option("--tableau", o.tableau, "Tableau in row/cell notation")->required();
  htrace->add_option("--map", o.map, "psi or phi (default: from the input)");
  htrace->callback([&] { action = [&] { return cmd_hooktab_trace(o); }; });

  auto* conj = app.add_subcommand("verify-conjecture", "alpha-falling-factorial positivity of J* and Ko");
  add_max(conj);
  add_d(conj);
  conj->add_flag("--perturb", o.perturb, "Negative self-test: flip one coefficient");
  conj->callback([&] { action = [&] { return cmd_verify_conjecture(o); }; });

  auto* cross = app.add_subcommand("crossval", "Cross-route equalities");
  add_max(cross);
  add_d(cross);
  cross->add_flag("--perturb", o.perturb, "Negative self-test: flip one coefficient");
  cross->callback([&] { action = [&] { return cmd_crossval(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooManyBlocks& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
