#include "hecke/fusion.hpp"

#include <map>
#include <mutex>
#include <set>

#include "hecke/series.hpp"

namespace hecke {

namespace {

struct FactorSpec {
  int gen, i, j;
};

std::vector<FactorSpec> f_factors(const StandardTableau& t) {
  std::vector<FactorSpec> f;
  for (int j = 2; j <= t.size(); ++j)
    for (int i = 1; i < j; ++i) f.push_back({j - i, i, j});
  return f;
}

std::vector<FactorSpec> g_factors(const StandardTableau& t) {
  std::vector<FactorSpec> f;
  const auto B = b_sequences(t);
  for (int j = 1; j <= t.size(); ++j) {
    const auto& bj = B[static_cast<std::size_t>(j - 1)];
    for (int k = 1; k <= static_cast<int>(bj.size()); ++k) f.push_back({j - k, bj[static_cast<std::size_t>(k - 1)], j});
  }
  return f;
}

std::vector<Rational> slopes_for_attempt(const FusionConfig& cfg, int columns, int attempt) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::vector<Rational> s;
  if (attempt == 0 && !cfg.directions.empty()) {
    if (static_cast<int>(cfg.directions.size()) < columns) throw InvalidInput("need one line direction per column");
    s.assign(cfg.directions.begin(), cfg.directions.begin() + columns);
    std::set<Rational> seen;
    for (const auto& b : s)
      if (sgn(b) == 0 || !seen.insert(b).second) throw InvalidInput("line directions must be distinct and nonzero");
    return s;
  }
  for (int b = 1; b <= columns; ++b) {
    if (attempt == 0)
      s.emplace_back(b);
    else
      s.emplace_back(primes[static_cast<std::size_t>(b - 1 + 3 * (attempt - 1)) % std::size(primes)]);
  }
  return s;
}

// eps^P times the product along the line, P = number of factors with a pole
// at eps = 0.  The limit exists iff the eps^k coefficients vanish for k < P.
std::optional<Element> limit_by_series(const StandardTableau& t, const std::vector<FactorSpec>& factors,
                                       const std::vector<Rational>& slopes) {
  const int l = t.size();
  int P = 0;
  for (const auto& f : factors)
    if (t.content(f.i) == t.content(f.j)) ++P;
  auto slope = [&](int i) { return RationalFunction(slopes[static_cast<std::size_t>(t.column_of(i) - 1)]); };
  std::vector<EpsSeries> z;
  for (int i = 1; i <= l; ++i) z.push_back(EpsSeries::linear(RationalFunction(1), slope(i), P));

  AlgebraElement<EpsSeries> e = AlgebraElement<EpsSeries>::unit(l);
  for (const auto& f : factors) {
    if (t.content(f.i) == t.content(f.j)) {
      // eps F(x,y) = eps T + (q - q^{-1}) z_i / (beta_j - beta_i)
      const RationalFunction db = slope(f.j) - slope(f.i);
      if (db.is_zero()) throw SingularFactor("factor singular on the whole line");
      const EpsSeries c = z[static_cast<std::size_t>(f.i - 1)] * EpsSeries(q_diff() / db);
      AlgebraElement<EpsSeries> old = e;
      e.mul_right_gen(f.gen);
      for (std::size_t s = 0; s < e.dimension(); ++s)
        if (!coeff_is_zero(e[s])) e[s] = e[s].shifted(1);
      e.add_scaled(old, c);
    } else {
      e.mul_right_factor(f.gen, baxter_scalar(q2c<EpsSeries>(t.content(f.i)) * z[static_cast<std::size_t>(f.i - 1)],
                                              q2c<EpsSeries>(t.content(f.j)) * z[static_cast<std::size_t>(f.j - 1)]));
    }
  }
  Element out(l);
  for (std::size_t s = 0; s < e.dimension(); ++s) {
    for (int k = 0; k < P; ++k)
      if (!e[s][k].is_zero()) return std::nullopt;
    out[s] = e[s][P];
  }
  return out;
}

Element fuse(const StandardTableau& t, const FusionConfig& cfg, const std::vector<FactorSpec>& factors) {
  const int columns = t.shape().part(1);
  for (int attempt = 0; attempt <= std::max(0, cfg.retry_budget); ++attempt) {
    if (auto r = limit_by_series(t, factors, slopes_for_attempt(cfg, columns, attempt))) return *r;
  }
  throw NotRegular("fusion limit has a pole on every tried line for tableau " + t.to_string());
}

template <class Product>
Element fuse_by_fractions(const StandardTableau& t, const FusionConfig& cfg, Product&& product) {
  const int columns = t.shape().part(1);
  const EpsilonFunction e = eps();
  for (int attempt = 0; attempt <= std::max(0, cfg.retry_budget); ++attempt) {
    const auto slopes = slopes_for_attempt(cfg, columns, attempt);
    std::vector<EpsilonFunction> z;
    for (int i = 1; i <= t.size(); ++i)
      z.push_back(EpsilonFunction(1) + EpsilonFunction(RationalFunction(slopes[static_cast<std::size_t>(t.column_of(i) - 1)])) * e);
    try {
      return eval_eps_zero(product(t, z));
    } catch (const NotRegular&) {
    }
  }
  throw NotRegular("fusion limit has a pole on every tried line for tableau " + t.to_string());
}

}  // namespace

Element fuse_F(const StandardTableau& t, const FusionConfig& cfg) { return fuse(t, cfg, f_factors(t)); }

Element fuse_G_direct(const StandardTableau& t, const FusionConfig& cfg) { return fuse(t, cfg, g_factors(t)); }

Element fuse_F_fractions(const StandardTableau& t, const FusionConfig& cfg) {
  return fuse_by_fractions(t, cfg, [](const StandardTableau& x, const std::vector<EpsilonFunction>& z) {
    return ordered_product(x, z);
  });
}

Element fuse_G_fractions(const StandardTableau& t, const FusionConfig& cfg) {
  return fuse_by_fractions(t, cfg, [](const StandardTableau& x, const std::vector<EpsilonFunction>& z) {
    return b_ordered_product(x, z);
  });
}

Element fuse_F_cached(const StandardTableau& t) {
  static std::mutex m;
  static std::map<std::string, Element> memo;
  const std::string key = t.to_string();
  {
    std::lock_guard<std::mutex> g(m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Element f = fuse_F(t);
  std::lock_guard<std::mutex> g(m);
  return memo.emplace(key, std::move(f)).first->second;
}

Element transport_F(const StandardTableau& from, int k, const Element& f_from) {
  const int l = from.size();
  if (f_from.rank() != l) throw InvalidInput("element rank differs from tableau size");
  if (!from.swapped(k)) throw InvalidInput("sigma_" + std::to_string(k) + " does not keep " + from.to_string() + " standard");
  const RationalFunction x = q2c<RationalFunction>(from.content(k)), y = q2c<RationalFunction>(from.content(k + 1));
  // F_k(x,y)^{-1} = F_k(y,x) / u(x,y)
  Element r = f_from;
  r.mul_right_factor(l - k, baxter_scalar(y, x));
  r.mul_left_factor(k, baxter_scalar(y, x));
  return r * unitarity_scalar(x, y).inverse();
}

std::vector<int> path_to_column(const StandardTableau& t, PathChoice choice) {
  std::vector<int> path;
  const StandardTableau target = column_tableau(t.shape());
  StandardTableau cur = t;
  while (!(cur == target)) {
    int pick = 0;
    for (int k = 1; k < cur.size(); ++k)
      if (d_value(cur, k) >= 2) {
        pick = k;
        if (choice == PathChoice::lowest) break;
      }
    if (pick == 0) throw InvariantViolation("no descent step towards the column tableau from " + cur.to_string());
    path.push_back(pick);
    cur = *cur.swapped(pick);
  }
  return path;
}

Element transport_chain_F(const StandardTableau& t, PathChoice choice) {
  const auto path = path_to_column(t, choice);
  StandardTableau cur = column_tableau(t.shape());
  Element f = fuse_F_cached(cur);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    f = transport_F(cur, *it, f);
    cur = *cur.swapped(*it);
  }
  return f;
}

Element step_G(const StandardTableau& from, int k, const Element& g_from) {
  if (!from.swapped(k)) throw InvalidInput("sigma_" + std::to_string(k) + " does not keep " + from.to_string() + " standard");
  const RationalFunction x = q2c<RationalFunction>(from.content(k)), y = q2c<RationalFunction>(from.content(k + 1));
  Element g = g_from;
  g.mul_left_factor(k, baxter_scalar(y, x));
  if (d_value(from, k) <= -2) g = g * unitarity_scalar(x, y).inverse();
  return g;
}

Element fuse_G(const StandardTableau& t, PathChoice choice) {
  const auto path = path_to_column(t, choice);
  StandardTableau cur = column_tableau(t.shape());
  Element g = fuse_F_cached(cur);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    g = step_G(cur, *it, g);
    cur = *cur.swapped(*it);
  }
  return g;
}

Element diagonal_element(const StandardTableau& t) {
  return fuse_F_cached(t) * inv_basis(t.size(), longest_element(t.size()));
}

RationalFunction proportionality(const Element& a, const Element& b) {
  if (a.rank() != b.rank()) throw InvalidInput("element ranks differ");
  if (b.is_zero()) throw InvalidInput("proportionality against the zero element");
  const auto supp = b.support();
  const RationalFunction r = a[supp.front()] / b[supp.front()];
  if (!(a == b * r)) throw InvariantViolation("elements are not proportional");
  return r;
}

RationalFunction h_from_idempotency(const StandardTableau& t) {
  const Element e = diagonal_element(t);
  return proportionality(e * e, e);
}

namespace {

// prod_j prod_{k<=|A_j|} F_{j-k}(q^{2c_i}, q^{2c_j}) with i = A_j(k)
Element a_chain(const StandardTableau& t) {
  const int l = t.size();
  const auto A = a_sequences(t);
  Element e = Element::unit(l);
  for (int j = 1; j <= l; ++j) {
    const auto& aj = A[static_cast<std::size_t>(j - 1)];
    for (int k = 1; k <= static_cast<int>(aj.size()); ++k) {
      const int i = aj[static_cast<std::size_t>(k - 1)];
      e.mul_right_factor(j - k, baxter_scalar(q2c<RationalFunction>(t.content(i)), q2c<RationalFunction>(t.content(j))));
    }
  }
  return e;
}

}  // namespace

Identity prop26_identity(const StandardTableau& t) {
  const int l = t.size();
  const auto A = a_sequences(t);
  Element lhs = fuse_F_cached(t);
  for (int j = 1; j <= l; ++j) {
    const auto& aj = A[static_cast<std::size_t>(j - 1)];
    for (int k = 1; k <= static_cast<int>(aj.size()); ++k) {
      const int i = aj[static_cast<std::size_t>(k - 1)];
      lhs.mul_right_factor(l - j + k, baxter_scalar(q2c<RationalFunction>(t.content(j)), q2c<RationalFunction>(t.content(i))));
    }
  }
  return {lhs, a_chain(t) * fuse_F_cached(column_tableau(t.shape()))};
}

Identity cor31_identity(const StandardTableau& t) {
  const auto A = a_sequences(t);
  RationalFunction c(1);
  for (int j = 1; j <= t.size(); ++j)
    for (int i : A[static_cast<std::size_t>(j - 1)])
      c *= unitarity_scalar(q2c<RationalFunction>(t.content(i)), q2c<RationalFunction>(t.content(j)));
  return {fuse_G(t) * c, a_chain(t) * fuse_F_cached(column_tableau(t.shape()))};
}

namespace {

Element evaluation_chain(const StandardTableau& t, const RationalFunction& z, bool reversed) {
  const int l = t.size();
  Element e = Element::unit(l + 1);
  for (int k = 1; k <= l; ++k) {
    const int c = reversed ? t.content(l - k + 1) : t.content(k);
    e.mul_right_factor(k, baxter_scalar(z, q2c<RationalFunction>(c)));
  }
  return e;
}

}  // namespace

Identity prop28_identity(const StandardTableau& t, const RationalFunction& z) {
  const int l = t.size();
  const Element f = embed_low(fuse_F_cached(t), l + 1);
  Element up = Element::unit(l + 1), down = Element::unit(l + 1);
  for (int k = 1; k <= l; ++k) {
    up.mul_right_gen(k);
    down = down * inv_basis(l + 1, Permutation::simple(l + 1, k));
  }
  const Element cyc = (up - down * z) * (RationalFunction(1) - z).inverse();
  return {evaluation_chain(t, z, false) * f, cyc * f};
}

Identity prop29_identity(const StandardTableau& t, const RationalFunction& z) {
  const int l = t.size();
  const Element f = fuse_F_cached(t);
  return {evaluation_chain(t, z, false) * embed_low(f, l + 1), embed_shift(f, 1, l + 1) * evaluation_chain(t, z, true)};
}

bool leading_term_check(const StandardTableau& t, const Element& g) {
  const int l = t.size();
  const auto& grp = SymmetricGroup::get(l);
  const std::size_t top = grp.index(rho_of(t) * longest_element(l));
  if (!g[top].is_one()) return false;
  for (std::size_t s : g.support())
    if (s != top && grp.length(s) >= grp.length(top)) return false;
  return true;
}

Identity prop39_identity(const Partition& lambda) {
  const StandardTableau row = row_tableau(lambda);
  const int l = lambda.size();
  return {fuse_G(row) * inv_basis(l, rho_of(row) * longest_element(l)), a_symmetrizer(lambda)};
}

Identity beta_identity(const StandardTableau& t) {
  const int l = t.size();
  const long sign = (l * (l - 1) / 2) % 2 ? -1 : 1;
  return {beta(fuse_F_cached(t)), fuse_F_cached(t.conjugate()) * RationalFunction(sign)};
}

Lemma21Report check_lemma21(int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  Lemma21Report rep;
  rep.sign = sign;
  using E = EpsilonFunction;
  auto qe = [](int k) { return E(q_pow(k)); };
  const E h(q_diff()), s = eps(), one(1);
  // in H_3 over Q(q)(s), s = x^{-1} z
  const EpsElement T = EpsElement::gen(3, 1);
  EpsElement lhs = T + EpsElement::scalar(3, baxter_scalar(one, qe(-2 * sign)));
  lhs.mul_right_factor(1, baxter_scalar(one, qe(2 * sign) * s));
  lhs = lhs * (h / (s - one));
  const EpsElement display = (EpsElement::scalar(3, qe(sign)) - T * E(sign)) * (h / (s - qe(-2 * sign)));
  rep.corrected_identity = lhs == display * qe(-sign);
  rep.display_identity = lhs == display;
  {
    const auto supp = display.support();
    const E r = lhs[supp.front()] / display[supp.front()];
    if (lhs == display * r && r.is_laurent() && r.num().is_constant()) rep.display_ratio = eval_eps_zero(r);
  }

  // F_1(x,y) F_2(x,z) F_1(y,z) with z = 1, x = 1 + eps
  auto triple = [&](const E& x, const E& y) {
    EpsElement e = EpsElement::unit(3);
    e.mul_right_factor(1, baxter_scalar(x, y));
    e.mul_right_factor(2, baxter_scalar(x, one));
    e.mul_right_factor(1, baxter_scalar(y, one));
    return e;
  };
  const E x = one + s;
  try {
    eval_eps_zero(triple(x, qe(-2 * sign) * x));
    rep.restricted_regular = true;
  } catch (const NotRegular&) {
  }
  try {
    eval_eps_zero(triple(x, E(3) * x));
  } catch (const NotRegular&) {
    rep.generic_singular = true;
  }
  return rep;
}

}  // namespace hecke
