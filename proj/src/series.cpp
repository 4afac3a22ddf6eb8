#include "hecke/series.hpp"

#include <algorithm>

namespace hecke {

EpsSeries EpsSeries::linear(const RationalFunction& c0, const RationalFunction& c1, int precision) {
  if (precision < 0) throw InvalidInput("series precision must be nonnegative");
  EpsSeries s;
  s.prec_ = precision;
  s.c_ = {c0, c1};
  s.truncate();
  return s;
}

RationalFunction EpsSeries::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return RationalFunction();
  return c_[static_cast<std::size_t>(k)];
}

void EpsSeries::truncate() {
  if (prec_ != exact && c_.size() > static_cast<std::size_t>(prec_) + 1) c_.resize(static_cast<std::size_t>(prec_) + 1);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EpsSeries EpsSeries::shifted(int k) const {
  if (k < 0) throw InvalidInput("negative shift of a power series");
  EpsSeries r = *this;
  if (!r.c_.empty()) r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), RationalFunction());
  r.truncate();
  return r;
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  prec_ = std::min(prec_, o.prec_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  truncate();
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) { return *this += -o; }

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries r;
  r.prec_ = std::min(a.prec_, b.prec_);
  if (a.c_.empty() || b.c_.empty()) return r;
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (r.prec_ != EpsSeries::exact) n = std::min(n, static_cast<std::size_t>(r.prec_) + 1);
  r.c_.assign(n, RationalFunction());
  for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.truncate();
  return r;
}

EpsSeries EpsSeries::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw NotRegular("power series with zero constant term is not invertible");
  const RationalFunction inv0 = c_[0].inverse();
  if (c_.size() == 1) {
    EpsSeries r(inv0);
    r.prec_ = prec_;
    return r;
  }
  if (prec_ == exact) throw InvalidInput("inverse of a non-constant series needs a finite precision");
  // b_0 = 1/a_0, b_k = -(sum_{j=1..k} a_j b_{k-j}) / a_0
  EpsSeries r;
  r.prec_ = prec_;
  r.c_.assign(static_cast<std::size_t>(prec_) + 1, RationalFunction());
  r.c_[0] = inv0;
  for (std::size_t k = 1; k < r.c_.size(); ++k) {
    RationalFunction acc;
    for (std::size_t j = 1; j <= k && j < c_.size(); ++j)
      if (!c_[j].is_zero() && !r.c_[k - j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  r.truncate();
  return r;
}

}  // namespace hecke
