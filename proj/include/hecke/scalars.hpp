#pragma once

// Exact scalars: Laurent polynomials and reduced rational functions over a
// field K.  RationalFunction = Q(q), EpsilonFunction = Q(q)(eps).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

using Rational = mpq_class;

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_one(const Rational& r) { return r == 1; }
// rough size, used to pick cheap pivots
inline std::size_t coeff_weight(const Rational&) { return 1; }

namespace detail {

inline int checked_exponent(long long e) {
  constexpr long long bound = std::numeric_limits<int>::max() / 4;
  if (e > bound || e < -bound) throw std::overflow_error("exponent overflow");
  return static_cast<int>(e);
}

}  // namespace detail

template <class K>
class LaurentPoly {
 public:
  using Term = std::pair<int, K>;

  LaurentPoly() = default;
  LaurentPoly(const K& c, int exponent = 0) {
    if (!coeff_is_zero(c)) terms_.emplace_back(exponent, c);
  }

  // Arbitrary order; duplicates are summed and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& term : t) {
      if (!p.terms_.empty() && p.terms_.back().first == term.first)
        p.terms_.back().second += term.second;
      else
        p.terms_.push_back(std::move(term));
    }
    std::erase_if(p.terms_, [](const Term& x) { return coeff_is_zero(x.second); });
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int low() const { return terms_.front().first; }
  int high() const { return terms_.back().first; }
  const K& leading() const { return terms_.back().second; }
  const K& trailing() const { return terms_.front().second; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && coeff_is_one(terms_[0].second);
  }

  K coefficient(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return K(0);
  }

  LaurentPoly shifted(int s) const {
    if (s == 0) return *this;
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = detail::checked_exponent(static_cast<long long>(t.first) + s);
    return r;
  }

  // p(x^{-1})
  LaurentPoly reflected() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& operator*=(const K& c) {
    if (coeff_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  LaurentPoly& operator/=(const K& c) {
    if (coeff_is_zero(c)) throw DivisionByZero("polynomial divided by zero scalar");
    for (auto& t : terms_) t.second /= c;
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return scale_shift(b, a.terms_[0].second, a.terms_[0].first);
    if (b.size() == 1) return scale_shift(a, b.terms_[0].second, b.terms_[0].first);
    long long lo = static_cast<long long>(a.low()) + b.low();
    long long hi = static_cast<long long>(a.high()) + b.high();
    detail::checked_exponent(lo);
    detail::checked_exponent(hi);
    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    LaurentPoly r;
    if (span <= 4 * a.size() * b.size() + 64) {
      std::vector<K> acc(span, K(0));
      K tmp;
      for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
          tmp = ca;
          tmp *= cb;
          acc[static_cast<std::size_t>(ea + eb - lo)] += tmp;
        }
      for (std::size_t i = 0; i < span; ++i)
        if (!coeff_is_zero(acc[i])) r.terms_.emplace_back(static_cast<int>(lo + static_cast<long long>(i)), std::move(acc[i]));
      return r;
    }
    std::vector<Term> all;
    all.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) all.emplace_back(ea + eb, K(ca * cb));
    return from_terms(std::move(all));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

 private:
  static LaurentPoly scale_shift(const LaurentPoly& p, const K& c, int s) {
    LaurentPoly r;
    r.terms_.reserve(p.size());
    for (const auto& [e, v] : p.terms_)
      r.terms_.emplace_back(detail::checked_exponent(static_cast<long long>(e) + s), K(v * c));
    return r;
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? K(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        K s = a.terms_[i].second;
        if (subtract)
          s -= b.terms_[j].second;
        else
          s += b.terms_[j].second;
        if (!coeff_is_zero(s)) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

// Dense polynomials, index = degree.
template <class K>
std::vector<K> to_dense(const LaurentPoly<K>& p) {
  std::vector<K> d(static_cast<std::size_t>(p.high() - p.low() + 1), K(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - p.low())] = c;
  return d;
}

template <class K>
LaurentPoly<K> from_dense(std::vector<K> d, int base) {
  std::vector<typename LaurentPoly<K>::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!coeff_is_zero(d[i])) t.emplace_back(base + static_cast<int>(i), std::move(d[i]));
  return LaurentPoly<K>::from_terms(std::move(t));
}

template <class K>
void trim(std::vector<K>& d) {
  while (!d.empty() && coeff_is_zero(d.back())) d.pop_back();
}

// a mod b over a field; b nonzero and trimmed.
template <class K>
void reduce_mod(std::vector<K>& a, const std::vector<K>& b) {
  trim(a);
  const std::size_t m = b.size() - 1;
  const K inv_lead = K(1) / b.back();
  K f;
  while (a.size() > m) {
    f = a.back();
    f *= inv_lead;
    const std::size_t shift = a.size() - 1 - m;
    for (std::size_t j = 0; j < m; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
}

template <class K>
std::vector<K> quotient_exact(std::vector<K> a, const std::vector<K>& b) {
  trim(a);
  const std::size_t m = b.size() - 1;
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw InvariantViolation("inexact polynomial division");
  }
  std::vector<K> q(a.size() - m, K(0));
  const K inv_lead = K(1) / b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    K f = a[k + m];
    f *= inv_lead;
    for (std::size_t j = 0; j <= m; ++j) a[k + j] -= f * b[j];
    q[k] = std::move(f);
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!coeff_is_zero(a[j])) throw InvariantViolation("inexact polynomial division");
  return q;
}

// Monic gcd over a field by the Euclidean algorithm.
template <class K>
std::vector<K> gcd_monic(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const K inv = K(1) / b.back();
    for (auto& c : b) c *= inv;
    reduce_mod(a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const K inv = K(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Rational coefficients: primitive integer remainder sequence.
std::vector<Rational> gcd_monic(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace detail

// gcd of two Laurent polynomials up to units q^k, returned with lowest exponent
// 0 and leading coefficient 1.
template <class K>
LaurentPoly<K> poly_gcd(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const auto& p = a.is_zero() ? b : a;
    auto r = p.shifted(-p.low());
    r /= K(r.leading());
    return r;
  }
  if (a.size() == 1 || b.size() == 1) return LaurentPoly<K>(K(1));
  auto g = detail::gcd_monic(detail::to_dense(a), detail::to_dense(b));
  return detail::from_dense(std::move(g), 0);
}

// a / g where g has lowest exponent 0 and divides a.
template <class K>
LaurentPoly<K> div_exact(const LaurentPoly<K>& a, const LaurentPoly<K>& g) {
  if (g.is_one()) return a;
  if (a.is_zero()) return a;
  auto q = detail::quotient_exact(detail::to_dense(a), detail::to_dense(g));
  return detail::from_dense(std::move(q), a.low());
}

// Reduced fraction num/den: den has lowest exponent 0 and leading coefficient 1.
template <class K>
class Fraction {
 public:
  using Coeff = K;
  using Poly = LaurentPoly<K>;

  Fraction() : den_(K(1)) {}
  Fraction(long c) : num_(K(c)), den_(K(1)) {}
  Fraction(const K& c) : num_(c), den_(K(1)) {}
  explicit Fraction(Poly p) : num_(std::move(p)), den_(K(1)) {}
  Fraction(Poly num, Poly den) { normalize(std::move(num), std::move(den)); }

  static Fraction variable(int power = 1) { return Fraction(Poly(K(1), power)); }
  static Fraction monomial(const K& c, int power) { return Fraction(Poly(c, power)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Fraction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const int s = num_.low();
    Poly d = num_.shifted(-s);
    Poly n = den_.shifted(-s);
    const K lead = d.leading();
    if (!coeff_is_one(lead)) {
      d /= lead;
      n /= lead;
    }
    return Fraction(std::move(n), std::move(d), Raw{});
  }

  Fraction operator-() const { return Fraction(-num_, den_, Raw{}); }

  Fraction& operator+=(const Fraction& o) { return *this = add(*this, o); }
  Fraction& operator-=(const Fraction& o) { return *this = add(*this, -o); }
  Fraction& operator*=(const Fraction& o) { return *this = mul(*this, o); }
  Fraction& operator/=(const Fraction& o) { return *this = mul(*this, o.inverse()); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return add(a, b); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return add(a, -b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return mul(a, b); }
  friend Fraction operator/(const Fraction& a, const Fraction& b) { return mul(a, b.inverse()); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool coeff_is_zero(const Fraction& f) { return f.is_zero(); }
  friend std::size_t coeff_weight(const Fraction& f) { return f.num_.size() + f.den_.size(); }
  friend bool coeff_is_one(const Fraction& f) { return f.is_one(); }

 private:
  struct Raw {};
  Fraction(Poly n, Poly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize(Poly n, Poly d) {
    if (d.is_zero()) throw DivisionByZero("zero denominator");
    if (n.is_zero()) {
      num_ = Poly();
      den_ = Poly(K(1));
      return;
    }
    const int s = d.low();
    d = d.shifted(-s);
    n = n.shifted(-s);
    if (!d.is_constant()) {
      Poly g = poly_gcd(n, d);
      if (!g.is_one()) {
        n = div_exact(n, g);
        d = div_exact(d, g);
      }
    }
    const K lead = d.leading();
    if (!coeff_is_one(lead)) {
      n /= lead;
      d /= lead;
    }
    num_ = std::move(n);
    den_ = std::move(d);
  }

  static Fraction add(const Fraction& a, const Fraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return Fraction(a.num_ + b.num_, a.den_, Raw{});
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return Fraction(a.num_ * b.den_ + b.num_, b.den_, Raw{});
    if (b.den_.is_one()) return Fraction(a.num_ + b.num_ * a.den_, a.den_, Raw{});
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_one())
      return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Raw{});
    Poly ad = div_exact(a.den_, g);
    Poly bd = div_exact(b.den_, g);
    Poly t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return Fraction();
    Poly g2 = poly_gcd(t, g);
    if (g2.is_one()) return Fraction(std::move(t), ad * b.den_, Raw{});
    return Fraction(div_exact(t, g2), ad * div_exact(b.den_, g2), Raw{});
  }

  static Fraction mul(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction();
    if (a.den_.is_one() && b.den_.is_one()) return Fraction(a.num_ * b.num_, a.den_, Raw{});
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
      Poly g = poly_gcd(an, bd);
      if (!g.is_one()) {
        an = div_exact(an, g);
        bd = div_exact(bd, g);
      }
    }
    if (!ad.is_one()) {
      Poly g = poly_gcd(bn, ad);
      if (!g.is_one()) {
        bn = div_exact(bn, g);
        ad = div_exact(ad, g);
      }
    }
    return Fraction(an * bn, ad * bd, Raw{});
  }

  Poly num_;
  Poly den_;
};

using LaurentPolynomial = LaurentPoly<Rational>;
using RationalFunction = Fraction<Rational>;
using EpsilonFunction = Fraction<RationalFunction>;

// Substitute a value for the variable; NotRegular at a pole.
template <class K>
K evaluate(const Fraction<K>& f, const K& x) {
  auto horner = [&](const LaurentPoly<K>& p) {
    if (p.is_zero()) return K(0);
    if (p.low() < 0 && coeff_is_zero(x)) throw NotRegular("negative power evaluated at zero");
    K acc(0);
    int e = p.high();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      while (e > it->first) {
        acc *= x;
        --e;
      }
      acc += it->second;
    }
    if (e > 0) {
      for (int i = 0; i < e; ++i) acc *= x;
    } else if (e < 0) {
      const K inv = K(1) / x;
      for (int i = 0; i < -e; ++i) acc *= inv;
    }
    return acc;
  };
  K d = horner(f.den());
  if (coeff_is_zero(d)) throw NotRegular("evaluation at a pole");
  return horner(f.num()) / d;
}

RationalFunction q_pow(int k);
// q - q^{-1}
const RationalFunction& q_diff();
// q -> q^{-1}
RationalFunction bar(const RationalFunction& f);
Rational specialize_q(const RationalFunction& f, const Rational& q0);

EpsilonFunction eps();
RationalFunction eval_eps_zero(const EpsilonFunction& f);
EpsilonFunction bar(const EpsilonFunction& f);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// "c*q^k + ... / c*q^k + ...", exponents ascending.
std::string to_text(const RationalFunction& f);
// Compact human form, e.g. "(q^2 + 1)/(q^2 - 1)".
std::string to_pretty(const RationalFunction& f);
std::string to_pretty(const EpsilonFunction& f, const std::string& var = "e");

// "3", "-1/2", "q", "q^-2", "3*q^2", "-1/2*q^-1".
RationalFunction parse_monomial(const std::string& s);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const EpsilonFunction& f);

}  // namespace hecke
