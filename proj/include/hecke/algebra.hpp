#pragma once

// Elements of the Hecke algebra H_l on the basis {T_sigma}, with
// (T_i - q)(T_i + q^{-1}) = 0.  Coefficients live in a field S, either
// RationalFunction or EpsilonFunction.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/scalars.hpp"
#include "hecke/symmetric_group.hpp"

namespace hecke {

template <class S>
const S& q_minus_inv() {
  static const S v = S(q_diff());
  return v;
}

template <class S>
class AlgebraElement {
 public:
  using Scalar = S;

  AlgebraElement() = default;
  // zero of H_rank
  explicit AlgebraElement(int rank) : group_(&SymmetricGroup::get(rank)), c_(group_->order()) {}

  static AlgebraElement unit(int rank) { return scalar(rank, S(1)); }
  static AlgebraElement scalar(int rank, const S& s) {
    AlgebraElement e(rank);
    e.c_[0] = s;
    return e;
  }
  static AlgebraElement basis(int rank, std::size_t idx, const S& s = S(1)) {
    AlgebraElement e(rank);
    e.c_.at(idx) = s;
    return e;
  }
  static AlgebraElement basis(int rank, const Permutation& p, const S& s = S(1)) {
    return basis(rank, SymmetricGroup::get(rank).index(p), s);
  }
  // T_i
  static AlgebraElement gen(int rank, int i) {
    if (i < 1 || i >= rank) throw InvalidInput("generator T_" + std::to_string(i) + " not in H_" + std::to_string(rank));
    return basis(rank, Permutation::simple(rank, i));
  }

  int rank() const { return group_ ? group_->rank() : 0; }
  const SymmetricGroup& group() const { return *group_; }
  std::size_t dimension() const { return c_.size(); }
  const S& operator[](std::size_t idx) const { return c_[idx]; }
  S& operator[](std::size_t idx) { return c_[idx]; }
  const S& coefficient(const Permutation& p) const { return c_[group_->index(p)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!coeff_is_zero(x)) return false;
    return true;
  }
  std::size_t support_size() const {
    std::size_t k = 0;
    for (const auto& x : c_)
      if (!coeff_is_zero(x)) ++k;
    return k;
  }
  // Indices with nonzero coefficient, in basis order.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) s.push_back(i);
    return s;
  }
  // Returns s when the element is s*1, throws otherwise.
  S as_scalar() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) throw InvariantViolation("element is not a scalar multiple of 1");
    return c_[0];
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& x : r.c_)
      if (!coeff_is_zero(x)) x = -x;
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_rank(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(o.c_[i])) c_[i] += o.c_[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_rank(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(o.c_[i])) c_[i] -= o.c_[i];
    return *this;
  }
  AlgebraElement& operator*=(const S& s) {
    for (auto& x : c_)
      if (!coeff_is_zero(x)) x *= s;
    return *this;
  }
  // this += s * o
  void add_scaled(const AlgebraElement& o, const S& s) {
    check_rank(o);
    if (coeff_is_zero(s)) return;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(o.c_[i])) c_[i] += s * o.c_[i];
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const S& s) { return a *= s; }
  friend AlgebraElement operator*(const S& s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.c_ == b.c_;
  }

  // this <- this * T_i
  AlgebraElement& mul_right_gen(int i) {
    check_gen(i);
    const S& h = q_minus_inv<S>();
    for (std::size_t s = 0; s < c_.size(); ++s) {
      const std::size_t t = group_->right(s, i);
      if (!(group_->length(t) > group_->length(s))) continue;
      // s ascent, t = s s_i: new[s] = old[t], new[t] = old[s] + h old[t]
      swap_step(s, t, h);
    }
    return *this;
  }
  // this <- T_i * this
  AlgebraElement& mul_left_gen(int i) {
    check_gen(i);
    const S& h = q_minus_inv<S>();
    for (std::size_t s = 0; s < c_.size(); ++s) {
      const std::size_t t = group_->left(s, i);
      if (!(group_->length(t) > group_->length(s))) continue;
      swap_step(s, t, h);
    }
    return *this;
  }
  // this <- this * (T_i + c)
  AlgebraElement& mul_right_factor(int i, const S& c) {
    if (coeff_is_zero(c)) return mul_right_gen(i);
    AlgebraElement old = *this;
    mul_right_gen(i);
    add_scaled(old, c);
    return *this;
  }
  // this <- (T_i + c) * this
  AlgebraElement& mul_left_factor(int i, const S& c) {
    if (coeff_is_zero(c)) return mul_left_gen(i);
    AlgebraElement old = *this;
    mul_left_gen(i);
    add_scaled(old, c);
    return *this;
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_rank(b);
    const std::size_t na = a.support_size(), nb = b.support_size();
    if (na == 0 || nb == 0) return AlgebraElement(a.rank());
    if (nb == 1 && !coeff_is_zero(b.c_[0])) return a * b.c_[0];
    if (na == 1 && !coeff_is_zero(a.c_[0])) return b * a.c_[0];
    // a*b = sum_sigma b_sigma (a T_sigma), walking a tree of reduced words;
    // or symmetrically on the left when a has the smaller support.
    return nb <= na ? expand(b, a, false) : expand(a, b, true);
  }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  template <class F>
  auto map_coefficients(F&& f) const -> AlgebraElement<std::decay_t<decltype(f(std::declval<const S&>()))>> {
    using R = std::decay_t<decltype(f(std::declval<const S&>()))>;
    AlgebraElement<R> r(rank());
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) r[i] = f(c_[i]);
    return r;
  }

  void check_rank(const AlgebraElement& o) const {
    if (group_ != o.group_) throw InvalidInput("rank mismatch: H_" + std::to_string(rank()) + " vs H_" + std::to_string(o.rank()));
  }

 private:
  void check_gen(int i) const {
    if (i < 1 || i >= rank()) throw InvalidInput("generator T_" + std::to_string(i) + " not in H_" + std::to_string(rank()));
  }
  void swap_step(std::size_t s, std::size_t t, const S& h) {
    const bool zs = coeff_is_zero(c_[s]), zt = coeff_is_zero(c_[t]);
    if (zs && zt) return;
    if (zt) {
      c_[t] = std::move(c_[s]);
      c_[s] = S();
      return;
    }
    S old_t = c_[t];
    if (zs)
      c_[t] = h * old_t;
    else
      c_[t] = c_[s] + h * old_t;
    c_[s] = std::move(old_t);
  }

  // on_left = false: sum_sigma coeffs_sigma (base T_sigma); true: sum coeffs_sigma (T_sigma base).
  static AlgebraElement expand(const AlgebraElement& coeffs, const AlgebraElement& base, bool on_left) {
    const SymmetricGroup& g = coeffs.group();
    const std::size_t N = g.order();
    std::vector<char> needed(N, 0);
    for (std::size_t s = 0; s < N; ++s) {
      if (coeff_is_zero(coeffs.c_[s])) continue;
      for (std::size_t u = s; !needed[u]; u = on_left ? g.left_parent(u) : g.right_parent(u)) {
        needed[u] = 1;
        if (u == 0) break;
      }
    }
    AlgebraElement result(coeffs.rank());
    std::function<void(std::size_t, AlgebraElement&&)> walk = [&](std::size_t node, AlgebraElement&& cur) {
      if (!coeff_is_zero(coeffs.c_[node])) result.add_scaled(cur, coeffs.c_[node]);
      const auto& kids = on_left ? g.left_children(node) : g.right_children(node);
      std::size_t last = kids.size();
      for (std::size_t k = 0; k < kids.size(); ++k)
        if (needed[kids[k].first]) last = k;
      for (std::size_t k = 0; k < kids.size(); ++k) {
        if (!needed[kids[k].first]) continue;
        AlgebraElement next;
        if (k == last)
          next = std::move(cur);
        else
          next = cur;
        if (on_left)
          next.mul_left_gen(kids[k].second);
        else
          next.mul_right_gen(kids[k].second);
        walk(kids[k].first, std::move(next));
      }
    };
    walk(0, AlgebraElement(base));
    return result;
  }

  template <class>
  friend class AlgebraElement;

  const SymmetricGroup* group_ = nullptr;
  std::vector<S> c_;
};

using Element = AlgebraElement<RationalFunction>;
using EpsElement = AlgebraElement<EpsilonFunction>;

// T_{w_1} ... T_{w_k}
template <class S = RationalFunction>
AlgebraElement<S> t_letters(int rank, const std::vector<int>& word) {
  AlgebraElement<S> e = AlgebraElement<S>::unit(rank);
  for (int i : word) e.mul_right_gen(i);
  return e;
}

// T_sigma via a reduced word of sigma.
template <class S = RationalFunction>
AlgebraElement<S> t_word(int rank, const Permutation& sigma) {
  if (sigma.size() != rank) throw InvalidInput("permutation degree differs from rank");
  return t_letters<S>(rank, sigma.reduced_word());
}

// T_sigma^{-1} = T_{i_L}^{-1} ... T_{i_1}^{-1} with T_i^{-1} = T_i - q + q^{-1}.
template <class S = RationalFunction>
AlgebraElement<S> inv_basis(int rank, const Permutation& sigma) {
  if (sigma.size() != rank) throw InvalidInput("permutation degree differs from rank");
  const auto w = sigma.reduced_word();
  const S c = -q_minus_inv<S>();
  AlgebraElement<S> e = AlgebraElement<S>::unit(rank);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e.mul_right_factor(*it, c);
  return e;
}

// X_i = T_{i-1} ... T_1 T_1 ... T_{i-1}
template <class S = RationalFunction>
AlgebraElement<S> murphy(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("Murphy element index out of range");
  AlgebraElement<S> e = AlgebraElement<S>::unit(rank);
  for (int k = i - 1; k >= 1; --k) e.mul_right_gen(k);
  for (int k = 1; k <= i - 1; ++k) e.mul_right_gen(k);
  return e;
}

template <class S = RationalFunction>
AlgebraElement<S> murphy_inverse(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("Murphy element index out of range");
  const S c = -q_minus_inv<S>();
  AlgebraElement<S> e = AlgebraElement<S>::unit(rank);
  for (int k = i - 1; k >= 1; --k) e.mul_right_factor(k, c);
  for (int k = 1; k <= i - 1; ++k) e.mul_right_factor(k, c);
  return e;
}

// Image z X_i of Y_i under the evaluation homomorphism.
template <class S = RationalFunction>
AlgebraElement<S> evaluation_murphy(int rank, int i, const S& z) {
  if (coeff_is_zero(z)) throw InvalidInput("evaluation parameter z must be nonzero");
  return murphy<S>(rank, i) * z;
}

// Antiautomorphism with T_sigma -> T_{sigma^{-1}}.
template <class S>
AlgebraElement<S> alpha(const AlgebraElement<S>& a) {
  AlgebraElement<S> r(a.rank());
  for (std::size_t s = 0; s < a.dimension(); ++s)
    if (!coeff_is_zero(a[s])) r[a.group().inverse(s)] = a[s];
  return r;
}

// Automorphism: q -> q^{-1} on coefficients, T_sigma -> (-1)^{l(sigma)} T_sigma.
template <class S>
AlgebraElement<S> beta(const AlgebraElement<S>& a) {
  AlgebraElement<S> r(a.rank());
  for (std::size_t s = 0; s < a.dimension(); ++s) {
    if (coeff_is_zero(a[s])) continue;
    S v = bar(a[s]);
    r[s] = a.group().length(s) % 2 ? S(-v) : v;
  }
  return r;
}

// T_i -> T_{i+offset} from H_rank into H_target.
template <class S>
AlgebraElement<S> embed_shift(const AlgebraElement<S>& a, int offset, int target) {
  const int r = a.rank();
  if (offset < 0 || r + offset > target) throw InvalidInput("embedding needs rank + offset <= target rank");
  AlgebraElement<S> out(target);
  const SymmetricGroup& g = out.group();
  for (std::size_t s = 0; s < a.dimension(); ++s) {
    if (coeff_is_zero(a[s])) continue;
    std::vector<int> v(static_cast<std::size_t>(target));
    for (int i = 1; i <= target; ++i) v[static_cast<std::size_t>(i - 1)] = i;
    const Permutation& p = a.group().perm(s);
    for (int i = 1; i <= r; ++i) v[static_cast<std::size_t>(offset + i - 1)] = offset + p(i);
    out[g.index(Permutation(std::move(v)))] = a[s];
  }
  return out;
}

template <class S>
AlgebraElement<S> embed_low(const AlgebraElement<S>& a, int target) {
  return embed_shift(a, 0, target);
}

// P_lambda = sum over the row Young subgroup of q^{-l(sigma)} T_sigma^{-1}
template <class S = RationalFunction>
AlgebraElement<S> p_symmetrizer(const Partition& lambda) {
  const int l = lambda.size();
  AlgebraElement<S> r(l);
  for (const auto& s : young_subgroup_elements(lambda, YoungArrangement::rows))
    r.add_scaled(inv_basis<S>(l, s), S(q_pow(-s.length())));
  return r;
}

// Q_lambda = sum over the column Young subgroup of (-q)^{l(sigma)} T_sigma^{-1}
template <class S = RationalFunction>
AlgebraElement<S> q_antisymmetrizer(const Partition& lambda) {
  const int l = lambda.size();
  AlgebraElement<S> r(l);
  for (const auto& s : young_subgroup_elements(lambda, YoungArrangement::columns)) {
    const int k = s.length();
    r.add_scaled(inv_basis<S>(l, s), S(q_pow(k) * RationalFunction(k % 2 ? -1 : 1)));
  }
  return r;
}

// A_lambda = P_lambda T_{rho^{-1}}^{-1} Q_lambda T_{rho^{-1}}, rho of the row tableau
template <class S = RationalFunction>
AlgebraElement<S> a_symmetrizer(const Partition& lambda) {
  const int l = lambda.size();
  const Permutation ri = rho_of(row_tableau(lambda)).inverse();
  return p_symmetrizer<S>(lambda) * inv_basis<S>(l, ri) * q_antisymmetrizer<S>(lambda) * t_word<S>(l, ri);
}

// Common conversions.
inline EpsElement to_eps(const Element& a) {
  return a.map_coefficients([](const RationalFunction& c) { return EpsilonFunction(c); });
}
inline Element eval_eps_zero(const EpsElement& a) {
  return a.map_coefficients([](const EpsilonFunction& c) { return eval_eps_zero(c); });
}

}  // namespace hecke
