#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalars.hpp"

namespace hecke {

// One-line notation, values 1..n.  Composition (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // sigma_i = (i i+1)
  static Permutation simple(int n, int i);
  // sigma_{w_1} sigma_{w_2} ... sigma_{w_k}
  static Permutation from_word(int n, const std::vector<int>& word);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;
  int length() const;
  bool is_identity() const;
  // A reduced word (greedy: strip the leftmost descent).
  std::vector<int> reduced_word() const;
  Permutation extended(int n) const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation longest_element(int l);
Permutation tau_permutation(int l, int m);

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  // "3,2,1"; the empty string is the empty partition.
  static Partition parse(const std::string& s);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  // lambda_a, zero beyond the last row.
  int part(int a) const { return a >= 1 && a <= rows() ? parts_[static_cast<std::size_t>(a - 1)] : 0; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  bool contains(int a, int b) const { return a >= 1 && b >= 1 && b <= part(a); }
  bool contains(const Partition& mu) const;
  std::vector<std::pair<int, int>> nodes() const;
  int hook_length(int a, int b) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// f_lambda by the hook length formula.
long long standard_tableau_count(const Partition& lambda);

class StandardTableau {
 public:
  StandardTableau() = default;
  // Rows of entries; validates shape, bijectivity onto 1..l and standardness.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  // Accepts "[[1,2],[3]]" (whitespace ignored).
  static StandardTableau parse(const std::string& s);

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(node_of_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int a, int b) const { return rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; }
  std::pair<int, int> node_of(int i) const { return node_of_[static_cast<std::size_t>(i - 1)]; }
  int row_of(int i) const { return node_of(i).first; }
  int column_of(int i) const { return node_of(i).second; }
  // c_i = b - a
  int content(int i) const;
  std::vector<int> contents() const;
  // sigma_k . Lambda when standard.
  std::optional<StandardTableau> swapped(int k) const;
  // Lambda*(b,a) = Lambda(a,b)
  StandardTableau conjugate() const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> node_of_;
};

// Lexicographic on the entry -> node sequence.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);
StandardTableau column_tableau(const Partition& lambda);
StandardTableau row_tableau(const Partition& lambda);

// (sigma . Lambda)(a,b) = sigma(Lambda(a,b)); nullopt when not standard.
std::optional<StandardTableau> act(const Permutation& sigma, const StandardTableau& t);

// Lambda = rho . Lambda_column
Permutation rho_of(const StandardTableau& t);
// Index j-1 holds A_j (resp. B_j), j = 1..l.
std::vector<std::vector<int>> a_sequences(const StandardTableau& t);
std::vector<std::vector<int>> b_sequences(const StandardTableau& t);
// prod_j prod_{k<=|A_j|} sigma_{j-k}: reduced word of rho.
std::vector<int> a_word(const StandardTableau& t);
// prod_j prod_{k<=|B_j|} sigma_{j-k}: reduced word of rho * sigma_0.
std::vector<int> b_word(const StandardTableau& t);
// d_k = c_k - c_{k+1}
int d_value(const StandardTableau& t, int k);

// xi_{i_a} = mu_{i_a} + lambda_a; other rows as mu.  Throws InvalidInput naming
// the first violated inequality.
Partition xi_partition(const Partition& lambda, const Partition& mu, const std::vector<int>& iseq);
StandardTableau xi_tableau(const Partition& lambda, const Partition& mu, const std::vector<int>& iseq,
                           const StandardTableau& m_tab);
// eta*_{j_b} = mu*_{j_b} + lambda*_b, eta = (eta*)*
Partition eta_partition(const Partition& lambda, const Partition& mu, const std::vector<int>& jseq);
// All insertion sequences giving a valid xi (resp. eta).
std::vector<std::vector<int>> admissible_iseqs(const Partition& lambda, const Partition& mu);
std::vector<std::vector<int>> admissible_jseqs(const Partition& lambda, const Partition& mu);

enum class YoungArrangement {
  rows,     // blocks of sizes lambda_1, lambda_2, ... (rows of the row tableau)
  columns,  // blocks of sizes lambda*_1, lambda*_2, ... (columns of the column tableau)
};
std::vector<Permutation> young_subgroup_elements(const Partition& lambda, YoungArrangement arrangement);

// Formulas valued in Q(q) or in Q(q)(t); t is passed in the target type.
template <class T>
T q_as(int k) {
  return T(q_pow(k));
}

// prod over b <= lambda_a, mu_a of (t - q^{-2(mu_a+lambda*_b-a-b+1)}) / (t - q^{2(lambda_a+mu*_b-a-b+1)})
template <class T>
T mixed_hook_ratio(const Partition& lambda, const Partition& mu, const T& t) {
  const Partition ls = lambda.conjugate(), ms = mu.conjugate();
  T num(1), den(1);
  for (int a = 1; a <= std::min(lambda.rows(), mu.rows()); ++a)
    for (int b = 1; b <= std::min(lambda.part(a), mu.part(a)); ++b) {
      T d = t - q_as<T>(2 * (lambda.part(a) + ms.part(b) - a - b + 1));
      if (d.is_zero()) throw DivisionByZero("mixed hook ratio: denominator factor vanishes at this t");
      num *= t - q_as<T>(-2 * (mu.part(a) + ls.part(b) - a - b + 1));
      den *= d;
    }
  return num / den;
}

// Product of the same fractions over the skew diagram {mu_a < b <= lambda_a}; any mu.
template <class T>
T skew_product(const Partition& lambda, const Partition& mu, const T& t) {
  const Partition ls = lambda.conjugate(), ms = mu.conjugate();
  T num(1), den(1);
  for (int a = 1; a <= lambda.rows(); ++a)
    for (int b = mu.part(a) + 1; b <= lambda.part(a); ++b) {
      T d = t - q_as<T>(2 * (lambda.part(a) + ms.part(b) - a - b + 1));
      if (d.is_zero()) throw DivisionByZero("skew product: denominator factor vanishes at this t");
      num *= t - q_as<T>(-2 * (mu.part(a) + ls.part(b) - a - b + 1));
      den *= d;
    }
  return num / den;
}

template <class T>
bool skew_cancellation_check(const Partition& lambda, const Partition& mu, const T& t) {
  if (!lambda.contains(mu))
    throw InvalidInput("skew diagram needs mu inside lambda: " + mu.to_string() + " vs " + lambda.to_string());
  return skew_product(lambda, mu, t) == T(1);
}

// h_lambda(q) in the two closed forms.
RationalFunction hook_scalar_hff(const Partition& lambda);
RationalFunction hook_scalar_hf(const Partition& lambda);
// Checks the two forms agree (InvariantViolation otherwise).
RationalFunction hook_scalar(const Partition& lambda);

}  // namespace hecke
