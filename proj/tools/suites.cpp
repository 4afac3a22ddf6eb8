#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <thread>

#include "hecke/fusion.hpp"
#include "hecke/intertwiner.hpp"
#include "hecke/seminormal.hpp"

namespace hecke::cli {

namespace {

// nullopt on success, otherwise a description of the failure
using Outcome = std::optional<json>;

struct Case {
  json key;
  std::function<Outcome()> run;
};

struct Check {
  std::string tag, name;
  std::vector<Case> cases;
};

Outcome expect(bool ok) { return ok ? Outcome() : Outcome(json::object()); }

Outcome expect(const Identity& id) {
  if (id.holds()) return std::nullopt;
  json j;
  j["lhs"] = to_json(id.lhs);
  j["rhs"] = to_json(id.rhs);
  return j;
}

Outcome expect_equal(const Element& a, const Element& b) { return expect(Identity{a, b}); }

// Runs every case on `jobs` threads; the reported counterexample is the first
// failing case in case order, so the report does not depend on scheduling.
CheckResult run_check(const std::string& suite, const Check& c, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Outcome> out(c.cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= c.cases.size()) return;
      try {
        out[i] = c.cases[i].run();
      } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        out[i] = j;
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(c.cases.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CheckResult r;
  r.suite = suite;
  r.tag = c.tag;
  r.name = c.name;
  r.cases = static_cast<int>(c.cases.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i]) {
      r.pass = false;
      r.counterexample = json::object();
      r.counterexample["case"] = c.cases[i].key;
      r.counterexample["detail"] = *out[i];
      break;
    }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RationalFunction q(int k) { return q_pow(k); }

std::vector<StandardTableau> all_tableaux(int max_size) {
  std::vector<StandardTableau> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& t : standard_tableaux(lambda)) out.push_back(t);
  return out;
}

std::vector<Partition> all_shapes(int max_size) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n)) out.push_back(lambda);
  return out;
}

std::vector<std::pair<Partition, Partition>> shape_pairs(int max_total) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int l = 1; l < max_total; ++l)
    for (int m = 1; l + m <= max_total; ++m)
      for (const auto& lambda : partitions_of(l))
        for (const auto& mu : partitions_of(m)) out.emplace_back(lambda, mu);
  return out;
}

json tableau_key(const StandardTableau& t) {
  json j;
  j["tableau"] = to_json(t);
  return j;
}

json shape_key(const Partition& p) {
  json j;
  j["shape"] = to_json(p);
  return j;
}

json pair_key(const Partition& lambda, const Partition& mu) {
  json j;
  j["lambda"] = to_json(lambda);
  j["mu"] = to_json(mu);
  return j;
}

Element random_element(std::mt19937_64& rng, int l, int terms) {
  const auto& g = SymmetricGroup::get(l);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  Element a(l);
  for (int k = 0; k < terms; ++k) a[pick(rng)] += q(e(rng)) * RationalFunction(c(rng)) + RationalFunction(c(rng));
  return a;
}

// ---------------------------------------------------------------- presentation

std::vector<Check> presentation_checks(const SuiteOptions& opt) {
  const int top = std::min(opt.lmax, 6);
  std::vector<Check> checks;
  auto per_generator = [&](std::string tag, std::string name, auto&& body) {
    Check c{std::move(tag), std::move(name), {}};
    for (int l = 2; l <= top; ++l)
      for (int i = 1; i < l; ++i) c.cases.push_back({json{{"rank", l}, {"i", i}}, [=] { return body(l, i); }});
    checks.push_back(std::move(c));
  };
  per_generator("(1.1)", "(T_i - q)(T_i + q^-1) = 0", [](int l, int i) {
    const Element t = Element::gen(l, i);
    return expect(((t - Element::scalar(l, q(1))) * (t + Element::scalar(l, q(-1)))).is_zero());
  });
  per_generator("(1.2)", "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", [](int l, int i) -> Outcome {
    if (i + 1 >= l) return std::nullopt;
    const Element a = Element::gen(l, i), b = Element::gen(l, i + 1);
    return expect_equal(a * b * a, b * a * b);
  });
  per_generator("(1.3)", "T_i T_j = T_j T_i for |i-j| >= 2", [](int l, int i) -> Outcome {
    for (int j = i + 2; j < l; ++j) {
      const Element a = Element::gen(l, i), b = Element::gen(l, j);
      if (auto o = expect_equal(a * b, b * a)) return o;
    }
    return std::nullopt;
  });
  per_generator("(Ti)", "T_i (T_i - q + q^-1) = 1", [](int l, int i) {
    const Element t = Element::gen(l, i);
    return expect_equal(t * (t - Element::scalar(l, q_diff())), Element::unit(l));
  });
  {
    Check c{"(Ti)", "T_sigma T_sigma^-1 = 1 for every sigma", {}};
    for (int l = 2; l <= std::min(top, 4); ++l)
      c.cases.push_back({json{{"rank", l}}, [l]() -> Outcome {
                           const auto& g = SymmetricGroup::get(l);
                           for (std::size_t s = 0; s < g.order(); ++s)
                             if (auto o = expect_equal(t_word(l, g.perm(s)) * inv_basis(l, g.perm(s)), Element::unit(l))) return o;
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"(1.6)", "Murphy elements commute; T_k X_i = X_i T_k for i != k, k+1", {}};
    for (int l = 2; l <= top; ++l)
      c.cases.push_back({json{{"rank", l}}, [l]() -> Outcome {
                           std::vector<Element> x;
                           for (int i = 1; i <= l; ++i) x.push_back(murphy(l, i));
                           for (int i = 1; i <= l; ++i) {
                             const auto& xi = x[static_cast<std::size_t>(i - 1)];
                             for (int j = i + 1; j <= l; ++j) {
                               const auto& xj = x[static_cast<std::size_t>(j - 1)];
                               if (auto o = expect_equal(xi * xj, xj * xi)) return o;
                             }
                             for (int k = 1; k < l; ++k)
                               if (i != k && i != k + 1)
                                 if (auto o = expect_equal(Element::gen(l, k) * xi, xi * Element::gen(l, k))) return o;
                           }
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  per_generator("(1.4)", "T_i (z X_i) T_i = z X_{i+1}, z = 3q^2", [](int l, int i) {
    const RationalFunction z = q(2) * 3;
    const Element t = Element::gen(l, i);
    return expect_equal(t * evaluation_murphy(l, i, z) * t, evaluation_murphy(l, i + 1, z));
  });
  {
    Check c{"§2 alpha, §4 beta", "alpha antiautomorphism, beta automorphism, both involutive; alpha(X_i) = X_i", {}};
    for (int l = 2; l <= std::min(top, 4); ++l)
      for (int trial = 0; trial < 4; ++trial) {
        const std::uint64_t seed = opt.seed * 1000003ULL + static_cast<std::uint64_t>(l * 16 + trial);
        c.cases.push_back({json{{"rank", l}, {"trial", trial}, {"seed", seed}}, [l, seed]() -> Outcome {
                             std::mt19937_64 rng(seed);
                             const Element a = random_element(rng, l, 4), b = random_element(rng, l, 4);
                             if (auto o = expect_equal(alpha(a * b), alpha(b) * alpha(a))) return o;
                             if (auto o = expect_equal(beta(a * b), beta(a) * beta(b))) return o;
                             if (auto o = expect_equal(alpha(alpha(a)), a)) return o;
                             if (auto o = expect_equal(beta(beta(a)), a)) return o;
                             for (int i = 1; i <= l; ++i)
                               if (auto o = expect_equal(alpha(murphy(l, i)), murphy(l, i))) return o;
                             return std::nullopt;
                           }});
      }
    checks.push_back(std::move(c));
  }
  {
    Check c{"§3 Remark", "e_1(X), e_2(X) are central", {}};
    for (int l = 2; l <= std::min(top, 4); ++l)
      c.cases.push_back({json{{"rank", l}}, [l]() -> Outcome {
                           Element e1(l), e2(l);
                           for (int i = 1; i <= l; ++i) {
                             e1 += murphy(l, i);
                             for (int j = i + 1; j <= l; ++j) e2 += murphy(l, i) * murphy(l, j);
                           }
                           for (int k = 1; k < l; ++k) {
                             const Element t = Element::gen(l, k);
                             if (auto o = expect_equal(t * e1, e1 * t)) return o;
                             if (auto o = expect_equal(t * e2, e2 * t)) return o;
                           }
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"§3 Remark", "sum identities for q^-l(s) T_s^-1 and (-q)^l(s) T_s^-1 over S_l", {}};
    for (int l = 1; l <= std::min(top, 4); ++l)
      c.cases.push_back({json{{"rank", l}}, [l]() -> Outcome {
                           const auto& g = SymmetricGroup::get(l);
                           Element lhs1(l), rhs1(l), lhs2(l), rhs2(l);
                           for (std::size_t s = 0; s < g.order(); ++s) {
                             const int k = g.length(s);
                             const RationalFunction sign(k % 2 ? -1 : 1);
                             lhs1.add_scaled(inv_basis(l, g.perm(s)), q(-k));
                             rhs1.add_scaled(Element::basis(l, s), q(k));
                             lhs2.add_scaled(inv_basis(l, g.perm(s)), sign * q(k));
                             rhs2.add_scaled(Element::basis(l, s), sign * q(-k));
                           }
                           const int e = l * (l - 1);
                           if (auto o = expect_equal(lhs1, rhs1 * q(-e))) return o;
                           return expect_equal(lhs2, rhs2 * q(e));
                         }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"(PQ)", "T_k P = P T_k = qP on row generators, T_k Q = Q T_k = -q^-1 Q on column generators", {}};
    for (const auto& lambda : all_shapes(std::min(top, 5)))
      c.cases.push_back({shape_key(lambda), [lambda]() -> Outcome {
                           const int l = lambda.size();
                           const Element P = p_symmetrizer(lambda), Q = q_antisymmetrizer(lambda);
                           const auto rows = young_subgroup_elements(lambda, YoungArrangement::rows);
                           const auto cols = young_subgroup_elements(lambda, YoungArrangement::columns);
                           for (int k = 1; k < l; ++k) {
                             const Permutation sk = Permutation::simple(l, k);
                             const Element t = Element::gen(l, k);
                             if (std::find(rows.begin(), rows.end(), sk) != rows.end()) {
                               if (auto o = expect_equal(t * P, P * q(1))) return o;
                               if (auto o = expect_equal(P * t, P * q(1))) return o;
                             }
                             if (std::find(cols.begin(), cols.end(), sk) != cols.end()) {
                               if (auto o = expect_equal(t * Q, Q * -q(-1))) return o;
                               if (auto o = expect_equal(Q * t, Q * -q(-1))) return o;
                             }
                           }
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  return checks;
}

// ---------------------------------------------------------------- fusion

std::vector<Check> fusion_checks(const SuiteOptions& opt) {
  const auto tabs = all_tableaux(opt.lmax);
  std::vector<Check> checks;
  auto per_tableau = [&](std::string tag, std::string name, const std::vector<StandardTableau>& ts, auto&& body) {
    Check c{std::move(tag), std::move(name), {}};
    for (const auto& t : ts) c.cases.push_back({tableau_key(t), [t, body] { return body(t); }});
    checks.push_back(std::move(c));
  };
  {
    Check c{"(2.1)/(2.2)/(2.4)", "Yang-Baxter, locality and unitarity with a symbolic spectral parameter", {}};
    for (int l = 3; l <= std::max(3, std::min(opt.lmax, 5)); ++l)
      c.cases.push_back({json{{"rank", l}}, [l]() -> Outcome {
                           using E = EpsilonFunction;
                           const E a = eps(), b = eps() * E(q(2)) * E(3), cc = E(q(-2)) * E(5);
                           for (int i = 1; i + 1 < l; ++i) {
                             const EpsElement lhs = baxter_factor(l, i, a, b) * baxter_factor(l, i + 1, a, cc) * baxter_factor(l, i, b, cc);
                             const EpsElement rhs = baxter_factor(l, i + 1, b, cc) * baxter_factor(l, i, a, cc) * baxter_factor(l, i + 1, a, b);
                             if (!(lhs == rhs)) return json{{"yang_baxter", i}};
                             for (int j = i + 2; j < l; ++j)
                               if (!(baxter_factor(l, i, a, b) * baxter_factor(l, j, b, cc) == baxter_factor(l, j, b, cc) * baxter_factor(l, i, a, b)))
                                 return json{{"locality", json::array({i, j})}};
                           }
                           for (int i = 1; i < l; ++i)
                             if (!(baxter_factor(l, i, a, b) * baxter_factor(l, i, b, a) == EpsElement::scalar(l, unitarity_scalar(a, b))))
                               return json{{"unitarity", i}};
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  per_tableau("Theorem 2.2", "fusion limit exists and equals the transport chain on both paths", tabs, [](const StandardTableau& t) -> Outcome {
    const Element f = fuse_F_cached(t);
    if (auto o = expect_equal(transport_chain_F(t, PathChoice::lowest), f)) return o;
    return expect_equal(transport_chain_F(t, PathChoice::highest), f);
  });
  per_tableau("Theorem 2.2", "series limit equals the eps-fraction limit", all_tableaux(std::min(opt.lmax, 4)),
              [](const StandardTableau& t) { return expect_equal(fuse_F_fractions(t), fuse_F_cached(t)); });
  per_tableau("Prop 2.3", "coefficient of T_0 in F is 1", tabs, [](const StandardTableau& t) {
    return expect(fuse_F_cached(t).coefficient(longest_element(t.size())).is_one());
  });
  per_tableau("Prop 2.4", "F T_0^-1 is alpha-invariant", tabs, [](const StandardTableau& t) {
    const Element e = diagonal_element(t);
    return expect_equal(alpha(e), e);
  });
  per_tableau("Props 2.5/2.7", "T_k F = qF within a row, T_k F = -q^-1 F within a column", tabs, [](const StandardTableau& t) -> Outcome {
    const Element f = fuse_F_cached(t);
    const int l = t.size();
    for (int k = 1; k < l; ++k) {
      if (t.column_of(k) == t.column_of(k + 1))
        if (auto o = expect_equal(Element::gen(l, k) * f, f * -q(-1))) return o;
      if (t.row_of(k) == t.row_of(k + 1))
        if (auto o = expect_equal(Element::gen(l, k) * f, f * q(1))) return o;
    }
    return std::nullopt;
  });
  per_tableau("Prop 2.6", "global transport identity", tabs, [](const StandardTableau& t) { return expect(prop26_identity(t)); });
  per_tableau("Props 2.8/2.9", "evaluation identities in rank l+1 at z = 3 and z = 5", tabs, [](const StandardTableau& t) -> Outcome {
    for (long z : {3, 5}) {
      if (auto o = expect(prop28_identity(t, RationalFunction(z)))) return o;
      if (auto o = expect(prop29_identity(t, RationalFunction(z)))) return o;
    }
    return std::nullopt;
  });
  per_tableau("§3 q=1", "coefficients of F and G are regular at q = 1", tabs, [](const StandardTableau& t) -> Outcome {
    const Element f = fuse_F_cached(t), g = fuse_G(t);
    for (const Element* e : {&f, &g})
      for (std::size_t s : e->support()) specialize_q((*e)[s], Rational(1));  // throws on a pole
    return std::nullopt;
  });
  {
    Check c{"Cor 3.5", "G elements form a basis of the left ideal generated by F of the column tableau", {}};
    for (const auto& lambda : all_shapes(opt.lmax)) c.cases.push_back({shape_key(lambda), [lambda] { return expect(check_g_basis(lambda)); }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"Lemma 2.1", "pole cancellation: corrected closed form, restricted regularity, generic control", {}};
    for (int sign : {1, -1})
      c.cases.push_back({json{{"sign", sign}}, [sign]() -> Outcome {
                           const Lemma21Report r = check_lemma21(sign);
                           if (r.ok()) return std::nullopt;
                           json j;
                           j["corrected_identity"] = r.corrected_identity;
                           j["restricted_regular"] = r.restricted_regular;
                           j["generic_singular"] = r.generic_singular;
                           return j;
                         }});
    checks.push_back(std::move(c));
  }
  per_tableau("Cor 3.1", "G by the unitarity chain from the column tableau", tabs, [](const StandardTableau& t) { return expect(cor31_identity(t)); });
  per_tableau("Prop 3.2", "G = T_{rho sigma_0} + shorter terms, X_i G = q^{2c_i} G, chain = direct limit", tabs, [](const StandardTableau& t) -> Outcome {
    const Element g = fuse_G(t);
    if (!leading_term_check(t, g)) return json{{"leading_term", false}};
    for (int i = 1; i <= t.size(); ++i)
      if (auto o = expect_equal(murphy(t.size(), i) * g, g * q(2 * t.content(i)))) return o;
    return expect_equal(fuse_G_direct(t), g);
  });
  per_tableau("Prop 3.8", "E^2 = hE with h = (hff) = (hf), h(1) = l!/f_lambda", tabs, [](const StandardTableau& t) -> Outcome {
    const RationalFunction h = h_from_idempotency(t);
    const Partition& p = t.shape();
    long long fact = 1;
    for (int k = 2; k <= p.size(); ++k) fact *= k;
    const bool classical = specialize_q(h, Rational(1)) == Rational(static_cast<long>(fact)) / static_cast<long>(standard_tableau_count(p));
    if (h == hook_scalar_hff(p) && h == hook_scalar_hf(p) && classical) return std::nullopt;
    return json{{"h", to_json(h)}, {"hff", to_json(hook_scalar_hff(p))}, {"hf", to_json(hook_scalar_hf(p))}, {"classical", classical}};
  });
  {
    Check c{"Prop 3.9", "G_row T_{rho sigma_0}^-1 = A_lambda", {}};
    for (const auto& lambda : all_shapes(opt.lmax)) c.cases.push_back({shape_key(lambda), [lambda] { return expect(prop39_identity(lambda)); }});
    checks.push_back(std::move(c));
  }
  per_tableau("§4 beta", "beta(F) = (-1)^{l(l-1)/2} F of the conjugate tableau", tabs, [](const StandardTableau& t) { return expect(beta_identity(t)); });
  return checks;
}

// ---------------------------------------------------------------- seminormal

std::vector<Check> seminormal_checks(const SuiteOptions& opt) {
  const auto shapes = all_shapes(opt.lmax);
  std::vector<Check> checks;
  auto per_shape = [&](std::string tag, std::string name, const std::vector<Partition>& ps, auto&& body) {
    Check c{std::move(tag), std::move(name), {}};
    for (const auto& p : ps) c.cases.push_back({shape_key(p), [p, body] { return body(p); }});
    checks.push_back(std::move(c));
  };
  per_shape("Theorem 3.3", "matrices satisfy the Hecke relations", shapes,
            [](const Partition& p) { return expect(satisfies_hecke_relations(build_rep_unchecked(p).generators)); });
  per_shape("Theorem 3.3", "matrices agree with T_k acting on the G basis", shapes,
            [](const Partition& p) { return expect(compare_with_ideal_model(build_rep(p))); });
  per_shape("Prop 3.4", "X_i diagonal with entries q^{2c_i}", shapes, [](const Partition& p) { return expect(check_murphy_diagonal(build_rep(p))); });
  per_shape("Cor 3.7", "restriction to H_{l-1} is block diagonal by the position of l", shapes,
            [](const Partition& p) { return expect(check_branching(build_rep(p))); });
  per_shape("§3 q=1", "classical limit: Coxeter relations and Jucys-Murphy contents", shapes,
            [](const Partition& p) { return expect(check_classical_limit(build_rep(p))); });
  {
    Check c{"(des)", "sum over lambda of chi_lambda(T_s^-1)/h_lambda is the delta at the identity", {}};
    for (int l = 1; l <= std::min(opt.lmax, 4); ++l) c.cases.push_back({json{{"rank", l}}, [l] { return expect(check_delta_expansion(l)); }});
    checks.push_back(std::move(c));
  }
  return checks;
}

// ---------------------------------------------------------------- intertwiner

std::vector<Check> intertwiner_checks(const SuiteOptions& opt) {
  std::vector<Check> checks;
  const auto pairs = shape_pairs(opt.lmax);
  struct Setup {
    StandardTableau L, M;
    long w;
  };
  std::vector<Setup> setups;
  for (const auto& [lambda, mu] : pairs)
    for (const auto& L : standard_tableaux(lambda))
      for (const auto& M : standard_tableaux(mu))
        for (long w : {3, 5}) setups.push_back({L, M, w});
  auto per_setup = [&](std::string tag, std::string name, auto&& body) {
    Check c{std::move(tag), std::move(name), {}};
    for (const auto& s : setups)
      c.cases.push_back({json{{"Lambda", to_json(s.L)}, {"M", to_json(s.M)}, {"z", "1"}, {"w", std::to_string(s.w)}},
                         [s, body] { return body(make_setup(s.L, s.M, RationalFunction(1), RationalFunction(s.w))); }});
    checks.push_back(std::move(c));
  };
  per_setup("(4)", "F_Lambda Fbar_M S = S' F_M Fbar_Lambda", [](const InducedSetup& s) { return expect(fundamental_relation(s)); });
  per_setup("Prop 4.1", "F_Lambda Fbar_M S = T_tau prod (t - q^{2c_i} Xbar_i X_{i+m}^-1)/(t - q^{2c_i}) F_M Fbar_Lambda",
            [](const InducedSetup& s) { return expect(prop41_identity(s)); });
  per_setup("(4.1)/(4.2)/(Tt)", "tau relations", [](const InducedSetup& s) { return expect(check_tau_relations(s)); });

  // One eigen report per (lambda, mu, w) with Lambda, M column tableaux, shared by the checks below.
  struct Item {
    Partition lambda, mu;
    long w;
  };
  std::vector<Item> items;
  for (const auto& [lambda, mu] : pairs)
    for (long w : {3, 5}) items.push_back({lambda, mu, w});
  struct Shared {
    std::vector<std::optional<EigenReport>> reports;
    std::vector<std::string> errors;
  };
  // outlives this function: the cases run later
  auto shared = std::make_shared<Shared>();
  shared->reports.resize(items.size());
  shared->errors.resize(items.size());
  {
    Check build{"§4", "induced module, J and its eigen data", {}};
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item it = items[i];
      build.cases.push_back({json{{"lambda", to_json(it.lambda)}, {"mu", to_json(it.mu)}, {"z", "1"}, {"w", std::to_string(it.w)}},
                             [shared, i, it]() -> Outcome {
                               try {
                                 shared->reports[i] = eigen_report(make_setup(column_tableau(it.lambda), column_tableau(it.mu), RationalFunction(1),
                                                                      RationalFunction(it.w)));
                               } catch (const std::exception& e) {
                                 shared->errors[i] = e.what();
                                 return json{{"error", e.what()}};
                               }
                               return std::nullopt;
                             }});
    }
    checks.push_back(std::move(build));
  }
  // These read the reports once the build check above has run.
  auto per_report = [&](std::string tag, std::string name, auto&& body) {
    Check c{std::move(tag), std::move(name), {}};
    for (std::size_t i = 0; i < items.size(); ++i)
      c.cases.push_back({json{{"lambda", to_json(items[i].lambda)}, {"mu", to_json(items[i].mu)}, {"z", "1"}, {"w", std::to_string(items[i].w)}},
                         [shared, i, body]() -> Outcome {
                           const auto& r = shared->reports[i];
                           if (!r) return json{{"error", shared->errors[i].empty() ? "report missing" : shared->errors[i]}};
                           return body(*r);
                         }});
    checks.push_back(std::move(c));
  };
  per_report("§1", "dim W = binom(l+m, l) f_lambda f_mu", [](const EigenReport& r) {
    const auto& s = r.setup;
    long long b = 1;
    for (int k = 1; k <= s.l; ++k) b = b * (s.m + k) / k;
    return expect(r.dimension == b * standard_tableau_count(s.lambda) * standard_tableau_count(s.mu));
  });
  per_report("§4", "J commutes with the left action of H_{l+m}", [](const EigenReport& r) { return expect(r.j_commutes); });
  auto predictions = [](const EigenReport& r, const std::string& kind, bool eigenvector) -> Outcome {
    bool any = false;
    for (const auto& p : r.predictions) {
      if (p.kind != kind) continue;
      any = true;
      const bool ok = eigenvector ? (p.has_eigenvector && p.eigenvector_ok) : p.determinant_ok;
      if (!ok) return json{{"sequence", p.sequence}, {"predicted", to_json(p.value)}};
    }
    return expect(any);
  };
  per_report("Theorem 4.5", "det(J - r_xi I) = 0 for every admissible i-sequence", [=](const EigenReport& r) { return predictions(r, "xi", false); });
  per_report("Theorem 4.6", "det(J - r_eta I) = 0 for every admissible j-sequence", [=](const EigenReport& r) { return predictions(r, "eta", false); });
  per_report("Prop 4.4", "alpha(Qbar G_Xi) F_M Fbar_Lambda T_tau^-1 is a nonzero eigenvector in W for r_xi",
             [=](const EigenReport& r) { return predictions(r, "xi", true); });
  {
    Check c{"Theorem 4.6", "r_eta from r_xi of the conjugate shapes through beta, t = 3, 5", {}};
    for (const auto& [lambda, mu] : pairs)
      c.cases.push_back({pair_key(lambda, mu), [lambda, mu]() -> Outcome {
                           for (const auto& j : admissible_jseqs(lambda, mu))
                             for (long t : {3, 5})
                               if (r_eta(lambda, mu, j, RationalFunction(t)) != r_eta_via_beta(lambda, mu, j, Rational(t)))
                                 return json{{"jseq", j}, {"t", t}};
                           return std::nullopt;
                         }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"Cor 1.1", "r_xi / r_eta = mixed hook product (1.9), symbolic t", {}};
    for (const auto& [lambda, mu] : pairs)
      c.cases.push_back({pair_key(lambda, mu), [lambda, mu]() -> Outcome {
                           const auto r = corollary11(lambda, mu, eps());
                           if (r.holds()) return std::nullopt;
                           return json{{"from_eigenvalues", to_pretty(r.from_eigenvalues)}, {"from_hooks", to_pretty(r.from_hooks)}};
                         }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"Prop 4.7", "product over the skew diagram is 1", {}};
    for (const auto& lambda : all_shapes(opt.lmax))
      for (int k = 0; k <= lambda.size(); ++k)
        for (const auto& mu : k ? partitions_of(k) : std::vector<Partition>{Partition()})
          if (lambda.contains(mu))
            c.cases.push_back({pair_key(lambda, mu), [lambda, mu] { return expect(skew_cancellation_check(lambda, mu, eps())); }});
    checks.push_back(std::move(c));
  }
  {
    Check c{"§1", "eigenvalues do not depend on the tableaux Lambda, M", {}};
    for (const auto& [lambda, mu] : shape_pairs(std::min(opt.lmax, 4)))
      for (const auto& L : standard_tableaux(lambda))
        for (const auto& M : standard_tableaux(mu))
          c.cases.push_back({json{{"Lambda", to_json(L)}, {"M", to_json(M)}, {"z", "1"}, {"w", "3"}}, [L, M]() -> Outcome {
                               const EigenReport r = eigen_report(make_setup(L, M, RationalFunction(1), RationalFunction(3)));
                               return expect(r.ok());
                             }});
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"presentation", "fusion", "seminormal", "intertwiner"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (opt.lmax < 1) throw InvalidInput("lmax must be positive");
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  std::vector<Check> checks;
  if (suite == "presentation")
    checks = presentation_checks(opt);
  else if (suite == "fusion")
    checks = fusion_checks(opt);
  else if (suite == "seminormal")
    checks = seminormal_checks(opt);
  else if (suite == "intertwiner")
    checks = intertwiner_checks(opt);
  else
    throw InvalidInput("unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& c : checks) out.push_back(run_check(suite, c, opt.jobs));
  return out;
}

}  // namespace hecke::cli
