#pragma once

// Power series in eps over Q(q), truncated after eps^precision.  Values built
// from integers or RationalFunctions are exact (unbounded precision).

#include <climits>
#include <vector>

#include "hecke/scalars.hpp"

namespace hecke {

class EpsSeries {
 public:
  static constexpr int exact = INT_MAX;

  EpsSeries() = default;
  EpsSeries(long c) : EpsSeries(RationalFunction(c)) {}
  EpsSeries(const RationalFunction& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  // c0 + c1 eps
  static EpsSeries linear(const RationalFunction& c0, const RationalFunction& c1, int precision);

  int precision() const { return prec_; }
  // Coefficient of eps^k; zero beyond the stored terms.
  RationalFunction operator[](int k) const;
  bool is_zero() const { return c_.empty(); }
  // Multiply by eps^k.
  EpsSeries shifted(int k) const;
  EpsSeries inverse() const;

  EpsSeries operator-() const;
  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const EpsSeries& o) { return *this = *this * o; }
  EpsSeries& operator/=(const EpsSeries& o) { return *this = *this * o.inverse(); }
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) { return a * b.inverse(); }
  friend bool operator==(const EpsSeries& a, const EpsSeries& b) { return a.prec_ == b.prec_ && a.c_ == b.c_; }
  friend bool coeff_is_zero(const EpsSeries& s) { return s.is_zero(); }
  friend bool coeff_is_one(const EpsSeries& s) { return s.c_.size() == 1 && s.c_[0].is_one(); }

 private:
  void truncate();

  int prec_ = exact;
  std::vector<RationalFunction> c_;  // no trailing zeros, size <= prec_ + 1
};

}  // namespace hecke
