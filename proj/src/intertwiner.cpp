#include "hecke/intertwiner.hpp"

#include <map>

namespace hecke {

namespace {

std::vector<RationalFunction> coefficients(const Element& e) {
  std::vector<RationalFunction> v(e.dimension());
  for (std::size_t s = 0; s < e.dimension(); ++s) v[s] = e[s];
  return v;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

InducedSetup make_setup(const StandardTableau& Lambda, const StandardTableau& M, const RationalFunction& z,
                        const RationalFunction& w) {
  if (z.is_zero() || w.is_zero()) throw InvalidInput("spectral parameters z, w must be nonzero");
  InducedSetup s;
  s.lambda = Lambda.shape();
  s.mu = M.shape();
  s.Lambda = Lambda;
  s.M = M;
  s.z = z;
  s.w = w;
  s.l = Lambda.size();
  s.m = M.size();
  s.n = s.l + s.m;
  if (s.l < 1 || s.m < 1) throw InvalidInput("both tableaux must be nonempty");
  const RationalFunction t = s.t();
  for (int k = -s.n; k <= s.n; ++k)
    if (t == q_pow(2 * k)) throw InvalidInput("z^{-1} w = q^" + std::to_string(2 * k) + " is not generic");
  s.generator = embed_low(fuse_F_cached(Lambda), s.n) * embed_shift(fuse_F_cached(M), s.l, s.n);
  s.generator_swapped = embed_low(fuse_F_cached(M), s.n) * embed_shift(fuse_F_cached(Lambda), s.m, s.n);
  return s;
}

std::vector<int> tau_word(int l, int m) {
  if (l < 1 || m < 1) throw InvalidInput("tau needs l, m >= 1");
  std::vector<int> w;
  for (int i = l; i >= 1; --i)
    for (int j = 1; j <= m; ++j) w.push_back(i + j - 1);
  return w;
}

Element tau_element(int l, int m) { return t_letters(l + m, tau_word(l, m)); }

Element s_element(const InducedSetup& s) {
  Element e = Element::unit(s.n);
  return apply_s(e, s);
}

Element& apply_s(Element& e, const InducedSetup& s) {
  for (int i = 1; i <= s.l; ++i)
    for (int j = s.m; j >= 1; --j)
      e.mul_right_factor(s.n - i - j + 1, baxter_scalar(q2c<RationalFunction>(s.Lambda.content(i)) * s.z,
                                                        q2c<RationalFunction>(s.M.content(j)) * s.w));
  return e;
}

Element& apply_j(Element& e, const InducedSetup& s) {
  apply_s(e, s);
  // T_i^{-1} = T_i - h
  const auto word = tau_word(s.l, s.m);
  const RationalFunction mh = -q_diff();
  for (auto it = word.rbegin(); it != word.rend(); ++it) e.mul_right_factor(*it, mh);
  return e;
}

Element s_prime_element(const InducedSetup& s) {
  Element e = Element::unit(s.n);
  for (int i = s.l; i >= 1; --i)
    for (int j = 1; j <= s.m; ++j)
      e.mul_right_factor(i + j - 1, baxter_scalar(q2c<RationalFunction>(s.Lambda.content(i)) * s.z,
                                                  q2c<RationalFunction>(s.M.content(j)) * s.w));
  return e;
}

Identity fundamental_relation(const InducedSetup& s) {
  return {s.generator * s_element(s), s_prime_element(s) * s.generator_swapped};
}

Identity prop41_identity(const InducedSetup& s) {
  const RationalFunction t = s.t();
  Element r = tau_element(s.l, s.m);
  for (int i = s.l; i >= 1; --i) {
    const RationalFunction c = q2c<RationalFunction>(s.Lambda.content(i));
    const Element xx = embed_shift(murphy(s.l, i), s.m, s.n) * murphy_inverse(s.n, i + s.m);
    r = r * ((Element::scalar(s.n, t) - xx * c) * (t - c).inverse());
  }
  return {s.generator * s_element(s), r * s.generator_swapped};
}

bool check_tau_relations(const InducedSetup& s) {
  const Element tt = tau_element(s.l, s.m);
  if (Permutation::from_word(s.n, tau_word(s.l, s.m)) != tau_permutation(s.l, s.m)) return false;
  if (static_cast<int>(tau_word(s.l, s.m).size()) != tau_permutation(s.l, s.m).length()) return false;
  for (int i = 1; i < s.l; ++i)
    if (Element::gen(s.n, i) * tt != tt * Element::gen(s.n, i + s.m)) return false;
  for (int j = 1; j < s.m; ++j)
    if (Element::gen(s.n, s.l + j) * tt != tt * Element::gen(s.n, j)) return false;
  return s.generator * tt == tt * s.generator_swapped;
}

std::optional<std::vector<RationalFunction>> InducedModule::coordinates(const Element& e) const {
  return coords.of(coefficients(e));
}

InducedModule span_induced(const InducedSetup& s) {
  InducedModule w;
  w.expected_dimension = static_cast<int>(binomial(s.n, s.l) * standard_tableau_count(s.lambda) * standard_tableau_count(s.mu));
  const auto& grp = SymmetricGroup::get(s.n);
  RowReducer<RationalFunction> rr(static_cast<int>(grp.order()));
  std::vector<std::pair<std::size_t, Element>> stack{{0, s.generator}};
  while (!stack.empty() && w.dimension() < w.expected_dimension + 1) {
    auto [idx, e] = std::move(stack.back());
    stack.pop_back();
    if (rr.add(coefficients(e))) w.basis.push_back(e);
    for (const auto& [child, letter] : grp.left_children(idx)) {
      Element c = e;
      c.mul_left_gen(letter);
      stack.emplace_back(child, std::move(c));
    }
  }
  if (w.dimension() != w.expected_dimension)
    throw InvariantViolation("induced module has dimension " + std::to_string(w.dimension()) + ", expected " +
                             std::to_string(w.expected_dimension));
  std::vector<std::vector<RationalFunction>> vecs;
  for (const auto& b : w.basis) vecs.push_back(coefficients(b));
  w.coords = Coordinates<RationalFunction>(std::move(vecs));
  return w;
}

namespace {

template <class Apply>
RFMatrix operator_matrix(const InducedModule& w, Apply&& apply) {
  const int d = w.dimension();
  RFMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    const auto x = w.coordinates(apply(w.basis[static_cast<std::size_t>(j)]));
    if (!x) throw InvariantViolation("operator does not preserve the induced module");
    for (int i = 0; i < d; ++i) m(i, j) = (*x)[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace

RFMatrix right_operator_matrix(const InducedModule& w, const Element& r) {
  return operator_matrix(w, [&](const Element& b) { return b * r; });
}

RFMatrix left_operator_matrix(const InducedModule& w, const Element& a) {
  return operator_matrix(w, [&](const Element& b) { return a * b; });
}

RFMatrix j_matrix(const InducedSetup& s, const InducedModule& w) {
  return operator_matrix(w, [&](Element b) { return apply_j(b, s); });
}

namespace {

std::vector<RationalFunction> ones_krylov(const RFMatrix& j) {
  return krylov_polynomial(j, std::vector<RationalFunction>(static_cast<std::size_t>(j.rows()), RationalFunction(1)));
}

bool is_eigenvalue(const RFMatrix& j, const std::vector<RationalFunction>& p, const RationalFunction& r) {
  RationalFunction at_r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) at_r = at_r * r + *it;
  if (at_r.is_zero()) return true;
  // the all-ones vector can miss an eigenspace
  return is_singular(j - RFMatrix::identity(j.rows()) * r);
}

}  // namespace

bool is_eigenvalue(const RFMatrix& j, const RationalFunction& r) {
  if (j.rows() == 0) return false;
  return is_eigenvalue(j, ones_krylov(j), r);
}

RationalFunction r_eta_via_beta(const Partition& lambda, const Partition& mu, const std::vector<int>& jseq,
                                const Rational& t) {
  return bar(r_xi(lambda.conjugate(), mu.conjugate(), jseq, RationalFunction(t)));
}

Element eigenvector_D(const InducedSetup& s, const std::vector<int>& iseq) {
  if (!(s.Lambda == column_tableau(s.lambda))) throw InvalidInput("the eigenvector needs Lambda = column tableau");
  const StandardTableau xi = xi_tableau(s.lambda, s.mu, iseq, s.M);
  const Element qbar = embed_shift(q_antisymmetrizer(s.lambda), s.m, s.n);
  Element d = alpha(qbar * fuse_G(xi)) * s.generator_swapped;
  const auto word = tau_word(s.l, s.m);
  const RationalFunction mh = -q_diff();
  for (auto it = word.rbegin(); it != word.rend(); ++it) d.mul_right_factor(*it, mh);
  return d;
}

bool EigenReport::ok() const {
  if (!j_commutes || predictions.empty()) return false;
  for (const auto& p : predictions)
    if (!p.ok()) return false;
  return true;
}

EigenReport eigen_report(const InducedSetup& s, const std::vector<int>& iseq, const std::vector<int>& jseq) {
  EigenReport rep;
  rep.setup = s;
  const InducedModule w = span_induced(s);
  rep.dimension = w.dimension();
  const RFMatrix j = j_matrix(s, w);
  const auto kp = ones_krylov(j);
  rep.j_commutes = true;
  for (int k = 1; k < s.n; ++k) {
    const RFMatrix lk = left_operator_matrix(w, Element::gen(s.n, k));
    if (lk * j != j * lk) rep.j_commutes = false;
  }
  const bool column = s.Lambda == column_tableau(s.lambda);
  const auto iseqs = iseq.empty() ? admissible_iseqs(s.lambda, s.mu) : std::vector<std::vector<int>>{iseq};
  const auto jseqs = jseq.empty() ? admissible_jseqs(s.lambda, s.mu) : std::vector<std::vector<int>>{jseq};
  // D depends on the sequence only through Xi
  struct Vector {
    Element d, dr;
    bool in_w;
  };
  std::map<std::string, Vector> vectors;
  for (const auto& seq : iseqs) {
    Prediction p{"xi", seq, xi_partition(s.lambda, s.mu, seq), r_xi(s.lambda, s.mu, seq, s.t())};
    p.determinant_ok = is_eigenvalue(j, kp, p.value);
    if (column) {
      p.has_eigenvector = true;
      const std::string key = xi_tableau(s.lambda, s.mu, seq, s.M).to_string();
      auto it = vectors.find(key);
      if (it == vectors.end()) {
        Vector v{eigenvector_D(s, seq), {}, false};
        v.dr = v.d;
        apply_j(v.dr, s);
        v.in_w = w.coordinates(v.d).has_value();
        it = vectors.emplace(key, std::move(v)).first;
      }
      const Vector& v = it->second;
      p.eigenvector_ok = !v.d.is_zero() && v.in_w && v.dr == v.d * p.value;
    }
    rep.predictions.push_back(std::move(p));
  }
  for (const auto& seq : jseqs) {
    Prediction p{"eta", seq, eta_partition(s.lambda, s.mu, seq), r_eta(s.lambda, s.mu, seq, s.t())};
    p.determinant_ok = is_eigenvalue(j, kp, p.value);
    rep.predictions.push_back(std::move(p));
  }
  return rep;
}

}  // namespace hecke
