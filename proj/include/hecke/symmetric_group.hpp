#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke/combinatorics.hpp"

namespace hecke {

// Tables for S_n with elements indexed by (length, lexicographic one-line).
// Index 0 is the identity and the last index the longest element.
class SymmetricGroup {
 public:
  static constexpr int max_rank = 8;

  // Built on first use; the returned reference stays valid.
  static const SymmetricGroup& get(int n);

  int rank() const { return n_; }
  std::size_t order() const { return perms_.size(); }
  const Permutation& perm(std::size_t idx) const { return perms_[idx]; }
  std::size_t index(const Permutation& p) const;
  int length(std::size_t idx) const { return length_[idx]; }
  std::size_t inverse(std::size_t idx) const { return inverse_[idx]; }
  std::size_t longest() const { return perms_.size() - 1; }

  // sigma * s_i and s_i * sigma, i = 1..n-1
  std::size_t right(std::size_t idx, int i) const { return right_[slot(idx, i)]; }
  std::size_t left(std::size_t idx, int i) const { return left_[slot(idx, i)]; }
  // sigma(i) > sigma(i+1), resp. sigma^{-1}(i) > sigma^{-1}(i+1)
  bool right_descent(std::size_t idx, int i) const { return length(right(idx, i)) < length(idx); }
  bool left_descent(std::size_t idx, int i) const { return length(left(idx, i)) < length(idx); }

  // Spanning trees of reduced words: T_child = T_parent T_letter (right tree)
  // and T_child = T_letter T_parent (left tree).
  const std::vector<std::pair<std::size_t, int>>& right_children(std::size_t idx) const { return right_children_[idx]; }
  const std::vector<std::pair<std::size_t, int>>& left_children(std::size_t idx) const { return left_children_[idx]; }
  std::size_t right_parent(std::size_t idx) const { return right_parent_[idx]; }
  std::size_t left_parent(std::size_t idx) const { return left_parent_[idx]; }

 private:
  explicit SymmetricGroup(int n);
  std::size_t slot(std::size_t idx, int i) const {
    return idx * static_cast<std::size_t>(n_ > 1 ? n_ - 1 : 1) + static_cast<std::size_t>(i - 1);
  }
  static std::size_t lehmer_rank(const std::vector<int>& v);

  int n_;
  std::vector<Permutation> perms_;
  std::vector<int> length_;
  std::vector<std::size_t> inverse_, right_, left_, by_lehmer_, right_parent_, left_parent_;
  std::vector<std::vector<std::pair<std::size_t, int>>> right_children_, left_children_;
};

}  // namespace hecke
