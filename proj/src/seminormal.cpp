#include "hecke/seminormal.hpp"

#include <set>

#include "hecke/fusion.hpp"

namespace hecke {

namespace {

const RationalFunction& hq() { return q_diff(); }

StandardTableau remove_largest(const StandardTableau& t) {
  auto rows = t.rows();
  const auto [a, b] = t.node_of(t.size());
  rows[static_cast<std::size_t>(a - 1)].pop_back();
  if (rows[static_cast<std::size_t>(a - 1)].empty()) rows.pop_back();
  return StandardTableau::from_rows(std::move(rows));
}

std::vector<RationalFunction> coefficients(const Element& e) {
  std::vector<RationalFunction> v(e.dimension());
  for (std::size_t s = 0; s < e.dimension(); ++s) v[s] = e[s];
  return v;
}

template <class S>
bool relations_hold(const std::vector<Matrix<S>>& g, const S& q1) {
  if (g.empty()) return true;
  const int n = g.front().rows();
  const auto I = Matrix<S>::identity(n);
  const S qinv = S(1) / q1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if ((g[i] - I * q1) * (g[i] + I * qinv) != Matrix<S>(n, n)) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1 && g[i] * g[j] * g[i] != g[j] * g[i] * g[j]) return false;
      if (j >= i + 2 && g[i] * g[j] != g[j] * g[i]) return false;
    }
  }
  return true;
}

}  // namespace

RationalFunction action_diagonal(int d) {
  if (d == 0) throw InvalidInput("d_k = 0 cannot occur for a standard tableau");
  return hq() / (RationalFunction(1) - q_pow(2 * d));
}

RationalFunction action_offdiagonal(int d) {
  if (d >= 2) return RationalFunction(1);
  if (d <= -2) {
    const RationalFunction s = q_pow(d) - q_pow(-d);
    return RationalFunction(1) - hq() * hq() / (s * s);
  }
  return RationalFunction();
}

int SeminormalRep::index_of(const StandardTableau& t) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == t) return static_cast<int>(i);
  throw InvalidInput("tableau " + t.to_string() + " is not in the basis of " + shape.to_string());
}

RFMatrix SeminormalRep::basis_image(const Permutation& sigma) const {
  if (sigma.size() != rank()) throw InvalidInput("permutation degree differs from the rank");
  RFMatrix m = RFMatrix::identity(dimension());
  for (int i : sigma.reduced_word()) m = m * generators[static_cast<std::size_t>(i - 1)];
  return m;
}

RFMatrix SeminormalRep::represent(const Element& a) const {
  if (a.rank() != rank()) throw InvalidInput("element rank differs from the representation");
  RFMatrix m(dimension(), dimension());
  const auto& g = a.group();
  for (std::size_t s : a.support()) m += basis_image(g.perm(s)) * a[s];
  return m;
}

SeminormalRep build_rep_unchecked(const Partition& lambda) {
  if (lambda.size() < 1) throw InvalidInput("shape must have at least one box");
  SeminormalRep rep;
  rep.shape = lambda;
  rep.basis = standard_tableaux(lambda);
  const int n = rep.dimension(), l = lambda.size();
  for (int k = 1; k < l; ++k) {
    RFMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
      const auto& t = rep.basis[static_cast<std::size_t>(j)];
      const int d = d_value(t, k);
      m(j, j) = action_diagonal(d);
      if (std::abs(d) >= 2) m(rep.index_of(*t.swapped(k)), j) = action_offdiagonal(d);
    }
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

bool satisfies_hecke_relations(const std::vector<RFMatrix>& gens) { return relations_hold(gens, q_pow(1)); }

SeminormalRep build_rep(const Partition& lambda) {
  SeminormalRep rep = build_rep_unchecked(lambda);
  if (!satisfies_hecke_relations(rep.generators))
    throw InvariantViolation("generator matrices of " + lambda.to_string() + " violate the Hecke relations");
  return rep;
}

RationalFunction character(const SeminormalRep& rep, const Element& a) { return rep.represent(a).trace(); }

bool check_delta_expansion(int l) {
  if (l < 1) throw InvalidInput("rank must be positive");
  std::vector<SeminormalRep> reps;
  std::vector<RationalFunction> weights;
  for (const auto& lambda : partitions_of(l)) {
    reps.push_back(build_rep(lambda));
    weights.push_back(hook_scalar(lambda).inverse());
  }
  const auto& g = SymmetricGroup::get(l);
  for (std::size_t s = 0; s < g.order(); ++s) {
    // T_sigma^{-1} maps to the inverse of the image of T_sigma
    RationalFunction total;
    const Element inv = inv_basis(l, g.perm(s));
    for (std::size_t r = 0; r < reps.size(); ++r) total += character(reps[r], inv) * weights[r];
    if (total != RationalFunction(s == 0 ? 1 : 0)) return false;
  }
  return true;
}

bool check_murphy_diagonal(const SeminormalRep& rep) {
  const int l = rep.rank();
  for (int i = 1; i <= l; ++i) {
    const RFMatrix x = rep.represent(murphy(l, i));
    if (!x.is_diagonal()) return false;
    for (int j = 0; j < rep.dimension(); ++j)
      if (x(j, j) != q_pow(2 * rep.basis[static_cast<std::size_t>(j)].content(i))) return false;
  }
  std::set<std::vector<int>> seen;
  for (const auto& t : rep.basis)
    if (!seen.insert(t.contents()).second) return false;
  return true;
}

bool check_branching(const SeminormalRep& rep) {
  const int l = rep.rank();
  if (l == 1) return true;
  const Partition& lambda = rep.shape;
  for (int a = 1; a <= lambda.rows(); ++a) {
    if (lambda.part(a) == lambda.part(a + 1)) continue;  // not a corner
    std::vector<int> block;
    for (int j = 0; j < rep.dimension(); ++j)
      if (rep.basis[static_cast<std::size_t>(j)].row_of(l) == a) block.push_back(j);
    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(a - 1)];
    if (parts.back() == 0) parts.pop_back();
    const SeminormalRep sub = build_rep(Partition(parts));
    if (static_cast<int>(block.size()) != sub.dimension()) return false;
    std::vector<int> to_sub(static_cast<std::size_t>(rep.dimension()), -1);
    for (int j : block) to_sub[static_cast<std::size_t>(j)] = sub.index_of(remove_largest(rep.basis[static_cast<std::size_t>(j)]));
    for (int k = 1; k <= l - 2; ++k) {
      const RFMatrix& m = rep.generators[static_cast<std::size_t>(k - 1)];
      const RFMatrix& ms = sub.generators[static_cast<std::size_t>(k - 1)];
      for (int j : block)
        for (int i = 0; i < rep.dimension(); ++i) {
          const int si = to_sub[static_cast<std::size_t>(i)];
          if (si < 0) {
            if (!m(i, j).is_zero()) return false;
          } else if (m(i, j) != ms(si, to_sub[static_cast<std::size_t>(j)])) {
            return false;
          }
        }
    }
  }
  return true;
}

bool compare_with_ideal_model(const SeminormalRep& rep) {
  const int l = rep.rank(), n = rep.dimension();
  std::vector<Element> g;
  for (const auto& t : rep.basis) g.push_back(fuse_G(t));
  const auto dim = static_cast<int>(g.front().dimension());
  RFMatrix a(dim, n);
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < dim; ++s) a(s, j) = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
  for (int k = 1; k < l; ++k)
    for (int j = 0; j < n; ++j) {
      Element tg = g[static_cast<std::size_t>(j)];
      tg.mul_left_gen(k);
      const auto x = solve(a, coefficients(tg));
      if (!x) throw InvariantViolation("T_k G_t leaves the span of the G basis");
      for (int i = 0; i < n; ++i)
        if ((*x)[static_cast<std::size_t>(i)] != rep.generators[static_cast<std::size_t>(k - 1)](i, j)) return false;
    }
  return true;
}

bool check_classical_limit(const SeminormalRep& rep) {
  using QM = Matrix<Rational>;
  const Rational one(1);
  std::vector<QM> s;
  for (const auto& m : rep.generators) s.push_back(m.map([&](const RationalFunction& f) { return specialize_q(f, one); }));
  if (!relations_hold(s, one)) return false;
  const int l = rep.rank(), n = rep.dimension();
  for (int i = 2; i <= l; ++i) {
    QM jm(n, n);
    for (int j = 1; j < i; ++j) {
      // (j i) = s_{i-1} ... s_{j+1} s_j s_{j+1} ... s_{i-1}
      std::vector<int> w;
      for (int k = i - 1; k > j; --k) w.push_back(k);
      w.push_back(j);
      for (int k = j + 1; k < i; ++k) w.push_back(k);
      QM t = QM::identity(n);
      for (int k : w) t = t * s[static_cast<std::size_t>(k - 1)];
      jm += t;
    }
    if (!jm.is_diagonal()) return false;
    for (int r = 0; r < n; ++r)
      if (jm(r, r) != Rational(rep.basis[static_cast<std::size_t>(r)].content(i))) return false;
  }
  return true;
}

bool check_g_basis(const Partition& lambda) {
  const int l = lambda.size();
  const auto& grp = SymmetricGroup::get(l);
  const auto tabs = standard_tableaux(lambda);
  RowReducer<RationalFunction> gs(static_cast<int>(grp.order()));
  for (const auto& t : tabs)
    if (!gs.add(coefficients(fuse_G(t)))) return false;

  // H_l F_column, spanned by T_sigma F_column
  RowReducer<RationalFunction> ideal(static_cast<int>(grp.order()));
  std::vector<std::pair<std::size_t, Element>> stack{{0, fuse_F_cached(column_tableau(lambda))}};
  while (!stack.empty()) {
    auto [idx, e] = std::move(stack.back());
    stack.pop_back();
    ideal.add(coefficients(e));
    for (const auto& [child, letter] : grp.left_children(idx)) {
      Element c = e;
      c.mul_left_gen(letter);
      stack.emplace_back(child, std::move(c));
    }
  }
  if (ideal.rank() != static_cast<int>(tabs.size())) return false;
  for (const auto& t : tabs)
    if (!ideal.contains(coefficients(fuse_G(t)))) return false;
  return true;
}

}  // namespace hecke
