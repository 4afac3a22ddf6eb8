#pragma once

// Dense exact linear algebra over a field of coefficients (Rational,
// RationalFunction, ...).  Gaussian elimination, pivoting on the lightest entry.

#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalars.hpp"

namespace hecke {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix size");
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return d_[idx(i, j)]; }
  const S& operator()(int i, int j) const { return d_[idx(i, j)]; }

  std::vector<S> column(int j) const {
    std::vector<S> v;
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < d_.size(); ++k)
      if (!coeff_is_zero(o.d_[k])) d_[k] += o.d_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < d_.size(); ++k)
      if (!coeff_is_zero(o.d_[k])) d_[k] -= o.d_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) {
    for (auto& x : a.d_)
      if (!coeff_is_zero(x)) x *= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw InvalidInput("matrix shapes do not compose");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (coeff_is_zero(x)) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!coeff_is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    if (static_cast<int>(v.size()) != a.c_) throw InvalidInput("vector length does not match matrix");
    std::vector<S> r(static_cast<std::size_t>(a.r_));
    for (int i = 0; i < a.r_; ++i)
      for (int j = 0; j < a.c_; ++j)
        if (!coeff_is_zero(a(i, j)) && !coeff_is_zero(v[static_cast<std::size_t>(j)]))
          r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

  S trace() const {
    if (r_ != c_) throw InvalidInput("trace of a non-square matrix");
    S t;
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }
  bool is_diagonal() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (i != j && !coeff_is_zero((*this)(i, j))) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(std::declval<const S&>()));
    Matrix<R> m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= r_ || j < 0 || j >= c_) throw InvalidInput("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j);
  }
  void same_shape(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix shapes differ");
  }

  int r_ = 0, c_ = 0;
  std::vector<S> d_;
};

namespace detail {

// Row echelon form in place; returns pivot columns.  sign tracks row swaps.
template <class S>
std::vector<int> echelon(Matrix<S>& m, int* sign = nullptr) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    std::size_t best = 0;
    for (int i = row; i < m.rows(); ++i)
      if (!coeff_is_zero(m(i, col)) && (p < 0 || coeff_weight(m(i, col)) < best)) {
        p = i;
        best = coeff_weight(m(i, col));
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (sign) *sign = -*sign;
    }
    const S inv = S(1) / m(row, col);
    for (int i = row + 1; i < m.rows(); ++i) {
      if (coeff_is_zero(m(i, col))) continue;
      const S f = m(i, col) * inv;
      for (int j = col; j < m.cols(); ++j)
        if (!coeff_is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

}  // namespace detail

template <class S>
int rank(Matrix<S> m) {
  return static_cast<int>(detail::echelon(m).size());
}

template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  int sign = 1;
  const auto piv = detail::echelon(m, &sign);
  if (static_cast<int>(piv.size()) < m.rows()) return S();
  S d(sign);
  for (int i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

// Over Q: scale rows to integers and run Bareiss with exact division.
inline Rational determinant(Matrix<Rational> m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const int n = m.rows();
  std::vector<mpz_class> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class x = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational d(n == 0 ? mpz_class(1) : at(n - 1, n - 1), scale);
  d.canonicalize();
  return sign < 0 ? Rational(-d) : d;
}

// Monic p of least degree with p(A) v = 0, coefficients from degree 0 up.
// Every root of p is an eigenvalue of A.
template <class S>
std::vector<S> krylov_polynomial(const Matrix<S>& a, std::vector<S> v) {
  if (a.rows() != a.cols() || static_cast<int>(v.size()) != a.rows()) throw InvalidInput("Krylov sequence needs a square matrix and a matching vector");
  bool zero = true;
  for (const auto& x : v) zero = zero && coeff_is_zero(x);
  if (zero) throw InvalidInput("Krylov sequence of the zero vector");
  std::vector<std::vector<S>> seq{std::move(v)};
  for (;;) {
    std::vector<S> next = a * seq.back();
    const int k = static_cast<int>(seq.size());
    Matrix<S> basis(a.rows(), k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < a.rows(); ++i) basis(i, j) = seq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (auto c = solve(basis, next)) {
      std::vector<S> p;
      for (auto& x : *c) p.push_back(-x);
      p.push_back(S(1));
      return p;
    }
    seq.push_back(std::move(next));
  }
}

// Exact singularity test for matrices over Q(q).  Clearing the denominators of
// row i multiplies the determinant by L_i and leaves a Laurent polynomial whose
// exponents lie in a window of width B = sum of the row widths.  Such a
// polynomial vanishes iff it vanishes at B + 1 distinct nonzero points, and at
// a point where no denominator vanishes that is det over Q being zero.
inline bool is_singular(const Matrix<RationalFunction>& m) {
  using Poly = RationalFunction::Poly;
  if (m.rows() != m.cols()) throw InvalidInput("singularity test needs a square matrix");
  const int n = m.rows();
  long long width = 0;
  Poly dens(Rational(1));
  for (int i = 0; i < n; ++i) {
    Poly l(Rational(1));
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) l = div_exact(l * m(i, j).den(), poly_gcd(l, m(i, j).den()));
    bool any = false;
    int lo = 0, hi = 0;
    for (int j = 0; j < n; ++j) {
      const auto& f = m(i, j);
      if (f.is_zero()) continue;
      // num * l / den, den has lowest exponent 0
      const int a = f.num().low() + l.low(), b = f.num().high() + l.high() - f.den().high();
      lo = any ? std::min(lo, a) : a;
      hi = any ? std::max(hi, b) : b;
      any = true;
    }
    if (!any) return true;
    width += hi - lo;
    dens = dens * l;
  }
  long long found = 0;
  for (long k = 2; found <= width; ++k) {
    // points 2, 1/2, 3, 1/3, ...
    for (const Rational& x : {Rational(k), Rational(1, k)}) {
      if (found > width) break;
      if (coeff_is_zero(evaluate(RationalFunction(dens), x))) continue;
      const auto mx = m.map([&](const RationalFunction& f) { return evaluate(f, x); });
      if (!coeff_is_zero(determinant(mx))) return false;
      ++found;
    }
  }
  return true;
}

// A solution of a x = b (free variables zero); nullopt when inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InvalidInput("right-hand side length does not match");
  Matrix<S> m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const auto piv = detail::echelon(m);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(a.cols()));
  for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
    const int c = piv[static_cast<std::size_t>(r)];
    S acc = m(r, a.cols());
    for (int j = c + 1; j < a.cols(); ++j)
      if (!coeff_is_zero(m(r, j)) && !coeff_is_zero(x[static_cast<std::size_t>(j)])) acc -= m(r, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(c)] = acc / m(r, c);
  }
  return x;
}

// Basis of {x : a x = 0}.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
  const auto piv = detail::echelon(m);
  std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<S>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<S> x(static_cast<std::size_t>(m.cols()));
    x[static_cast<std::size_t>(f)] = S(1);
    for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
      const int c = piv[static_cast<std::size_t>(r)];
      S acc;
      for (int j = c + 1; j < m.cols(); ++j)
        if (!coeff_is_zero(m(r, j)) && !coeff_is_zero(x[static_cast<std::size_t>(j)])) acc -= m(r, j) * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(c)] = acc / m(r, c);
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Grows an echelon basis one vector at a time.  Each stored row is reduced
// against the earlier ones, so a single pass in insertion order reduces.
template <class S>
class RowReducer {
 public:
  explicit RowReducer(int n) : n_(n) {}

  int dimension() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  std::vector<S> reduce(std::vector<S> v) const {
    if (static_cast<int>(v.size()) != n_) throw InvalidInput("vector length does not match the ambient space");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto p = static_cast<std::size_t>(pivots_[r]);
      if (coeff_is_zero(v[p])) continue;
      const S f = v[p];
      for (std::size_t j = p; j < v.size(); ++j)
        if (!coeff_is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    return v;
  }
  bool contains(const std::vector<S>& v) const {
    for (const auto& x : reduce(v))
      if (!coeff_is_zero(x)) return false;
    return true;
  }
  // true when v was independent of the stored rows
  bool add(const std::vector<S>& v) {
    auto w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && coeff_is_zero(w[p])) ++p;
    if (p == w.size()) return false;
    const S inv = S(1) / w[p];
    for (std::size_t j = p; j < w.size(); ++j)
      if (!coeff_is_zero(w[j])) w[j] *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(static_cast<int>(p));
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<S>> rows_;
  std::vector<int> pivots_;
};

// Same polynomial over Q(q), with the linear algebra done at a rational point.
// Krylov vectors independent at a point are independent over Q(q), so p found
// this way is still minimal; the dependency itself is solved exactly on a
// nonsingular minor and then checked on every row.
inline std::vector<RationalFunction> krylov_polynomial(const Matrix<RationalFunction>& a, std::vector<RationalFunction> v) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(v.size()) != n) throw InvalidInput("Krylov sequence needs a square matrix and a matching vector");
  auto regular_at = [&](const Rational& x) {
    for (int i = 0; i < n; ++i) {
      if (!v[static_cast<std::size_t>(i)].is_zero() && coeff_is_zero(evaluate(RationalFunction(v[static_cast<std::size_t>(i)].den()), x))) return false;
      for (int j = 0; j < n; ++j)
        if (!a(i, j).is_zero() && coeff_is_zero(evaluate(RationalFunction(a(i, j).den()), x))) return false;
    }
    return true;
  };
  Rational x0(3, 2);
  for (long k = 5; !regular_at(x0); k += 2) x0 = Rational(k, k - 1);
  auto at_point = [&](const std::vector<RationalFunction>& u) {
    std::vector<Rational> r;
    for (const auto& f : u) r.push_back(evaluate(f, x0));
    return r;
  };
  std::vector<std::vector<RationalFunction>> seq;
  RowReducer<Rational> rr(n);
  std::vector<RationalFunction> next = std::move(v);
  for (;;) {
    if (rr.add(at_point(next))) {
      seq.push_back(next);
      next = a * next;
      continue;
    }
    const int k = static_cast<int>(seq.size());
    if (k == 0) throw InvalidInput("Krylov sequence of the zero vector");
    // rows where the Krylov vectors have a nonsingular minor at x0
    Matrix<Rational> bt(k, n);
    for (int c = 0; c < k; ++c) {
      const auto r = at_point(seq[static_cast<std::size_t>(c)]);
      for (int i = 0; i < n; ++i) bt(c, i) = r[static_cast<std::size_t>(i)];
    }
    const auto rows = detail::echelon(bt);
    Matrix<RationalFunction> minor(k, k);
    std::vector<RationalFunction> rhs;
    for (int r = 0; r < k; ++r) {
      const auto i = static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]);
      for (int c = 0; c < k; ++c) minor(r, c) = seq[static_cast<std::size_t>(c)][i];
      rhs.push_back(next[i]);
    }
    const auto coef = solve(minor, rhs);
    if (!coef) throw InvariantViolation("Krylov minor is singular");
    std::vector<RationalFunction> combo(static_cast<std::size_t>(n));
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i) combo[static_cast<std::size_t>(i)] += seq[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] * (*coef)[static_cast<std::size_t>(c)];
    if (combo != next) {
      // dependent only at x0; finish exactly
      return krylov_polynomial<RationalFunction>(a, seq.front());
    }
    std::vector<RationalFunction> p;
    for (const auto& c : *coef) p.push_back(-c);
    p.emplace_back(1);
    return p;
  }
}


// Coordinates with respect to fixed independent vectors.  One inversion on a
// set of pivot coordinates, then each query costs a small product and a check.
template <class S>
class Coordinates {
 public:
  explicit Coordinates(std::vector<std::vector<S>> vectors) : vecs_(std::move(vectors)) {
    const int d = static_cast<int>(vecs_.size());
    if (d == 0) return;
    const int n = static_cast<int>(vecs_.front().size());
    // pick d coordinates on which the vectors stay independent
    RowReducer<S> rows(d);
    for (int i = 0; i < n && rows.rank() < d; ++i) {
      std::vector<S> r;
      for (const auto& v : vecs_) r.push_back(v[static_cast<std::size_t>(i)]);
      if (rows.add(r)) pivots_.push_back(i);
    }
    if (static_cast<int>(pivots_.size()) < d) throw InvalidInput("coordinate vectors are linearly dependent");
    Matrix<S> b(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) b(r, c) = vecs_[static_cast<std::size_t>(c)][static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
    inv_ = Matrix<S>(d, d);
    for (int c = 0; c < d; ++c) {
      std::vector<S> e(static_cast<std::size_t>(d));
      e[static_cast<std::size_t>(c)] = S(1);
      const auto x = solve(b, e);
      for (int r = 0; r < d; ++r) inv_(r, c) = (*x)[static_cast<std::size_t>(r)];
    }
  }

  int dimension() const { return static_cast<int>(vecs_.size()); }

  // nullopt when v is outside the span
  std::optional<std::vector<S>> of(const std::vector<S>& v) const {
    const int d = dimension();
    std::vector<S> vp;
    for (int i : pivots_) vp.push_back(v[static_cast<std::size_t>(i)]);
    std::vector<S> x = d ? inv_ * vp : std::vector<S>{};
    std::vector<S> back(v.size());
    for (int c = 0; c < d; ++c) {
      const S& xc = x[static_cast<std::size_t>(c)];
      if (coeff_is_zero(xc)) continue;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!coeff_is_zero(vecs_[static_cast<std::size_t>(c)][i])) back[i] += xc * vecs_[static_cast<std::size_t>(c)][i];
    }
    if (back != v) return std::nullopt;
    return x;
  }

 private:
  std::vector<std::vector<S>> vecs_;
  std::vector<int> pivots_;
  Matrix<S> inv_;
};

}  // namespace hecke
