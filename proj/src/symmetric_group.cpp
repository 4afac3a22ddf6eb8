#include "hecke/symmetric_group.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

namespace hecke {

const SymmetricGroup& SymmetricGroup::get(int n) {
  if (n < 1 || n > max_rank)
    throw InvalidInput("rank " + std::to_string(n) + " outside 1.." + std::to_string(max_rank));
  static std::array<std::unique_ptr<SymmetricGroup>, max_rank + 1> cache;
  static std::array<std::once_flag, max_rank + 1> flags;
  const auto k = static_cast<std::size_t>(n);
  std::call_once(flags[k], [&] { cache[k].reset(new SymmetricGroup(n)); });
  return *cache[k];
}

std::size_t SymmetricGroup::lehmer_rank(const std::vector<int>& v) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) ++c;
    r = r * (v.size() - i) + c;
  }
  return r;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do perms_.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  std::stable_sort(perms_.begin(), perms_.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });

  const std::size_t N = perms_.size();
  by_lehmer_.assign(N, 0);
  length_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    by_lehmer_[lehmer_rank(perms_[i].images())] = i;
    length_[i] = perms_[i].length();
  }

  const std::size_t g = static_cast<std::size_t>(n > 1 ? n - 1 : 1);
  right_.assign(N * g, 0);
  left_.assign(N * g, 0);
  inverse_.resize(N);
  for (std::size_t idx = 0; idx < N; ++idx) {
    const Permutation& p = perms_[idx];
    inverse_[idx] = index(p.inverse());
    for (int i = 1; i < n; ++i) {
      right_[slot(idx, i)] = index(p * Permutation::simple(n, i));
      left_[slot(idx, i)] = index(Permutation::simple(n, i) * p);
    }
  }

  right_parent_.assign(N, 0);
  left_parent_.assign(N, 0);
  right_children_.assign(N, {});
  left_children_.assign(N, {});
  for (std::size_t idx = 1; idx < N; ++idx) {
    int dr = 0, dl = 0;
    for (int i = 1; i < n; ++i) {
      if (right_descent(idx, i)) dr = i;
      if (left_descent(idx, i)) dl = i;
    }
    right_parent_[idx] = right(idx, dr);
    left_parent_[idx] = left(idx, dl);
    right_children_[right_parent_[idx]].emplace_back(idx, dr);
    left_children_[left_parent_[idx]].emplace_back(idx, dl);
  }
}

std::size_t SymmetricGroup::index(const Permutation& p) const {
  if (p.size() != n_) throw InvalidInput("permutation " + p.to_string() + " has wrong degree for S_" + std::to_string(n_));
  return by_lehmer_[lehmer_rank(p.images())];
}

}  // namespace hecke
