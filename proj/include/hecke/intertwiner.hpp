#pragma once

// The induced module W = H_{l+m} F_Lambda Fbar_M, the elements S, S' and the
// operator J of right multiplication by S T_tau^{-1}, with the predicted
// eigenvalues attached to the insertion sequences.

#include <optional>
#include <string>
#include <vector>

#include "hecke/fusion.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

using RFMatrix = Matrix<RationalFunction>;

struct InducedSetup {
  Partition lambda, mu;
  StandardTableau Lambda, M;
  RationalFunction z, w;
  int l = 0, m = 0, n = 0;
  Element generator;          // F_Lambda Fbar_M, Fbar_M shifted by l
  Element generator_swapped;  // F_M Fbar_Lambda, Fbar_Lambda shifted by m

  RationalFunction t() const { return w / z; }
};

// InvalidInput for z or w zero, or z^{-1} w = q^{2k} with |k| <= l + m.
InducedSetup make_setup(const StandardTableau& Lambda, const StandardTableau& M, const RationalFunction& z,
                        const RationalFunction& w);

// prod_{i=l..1} prod_{j=1..m} sigma_{i+j-1}
std::vector<int> tau_word(int l, int m);
Element tau_element(int l, int m);

Element s_element(const InducedSetup& s);
// e S and e S T_tau^{-1} in place, factor by factor
Element& apply_s(Element& e, const InducedSetup& s);
Element& apply_j(Element& e, const InducedSetup& s);
Element s_prime_element(const InducedSetup& s);

// F_Lambda Fbar_M S = S' F_M Fbar_Lambda
Identity fundamental_relation(const InducedSetup& s);
// F_Lambda Fbar_M S = T_tau prod_{i=l..1} (t - q^{2c_i} Xbar_i X_{i+m}^{-1})/(t - q^{2c_i}) F_M Fbar_Lambda
Identity prop41_identity(const InducedSetup& s);
// T_i T_tau = T_tau T_{i+m}, T_{l+j} T_tau = T_tau T_j, F_Lambda Fbar_M T_tau = T_tau F_M Fbar_Lambda
bool check_tau_relations(const InducedSetup& s);

struct InducedModule {
  std::vector<Element> basis;
  int expected_dimension = 0;
  Coordinates<RationalFunction> coords{{}};

  int dimension() const { return static_cast<int>(basis.size()); }
  std::optional<std::vector<RationalFunction>> coordinates(const Element& e) const;
};

// Independent vectors among T_sigma F_Lambda Fbar_M; InvariantViolation unless
// the count is binom(l+m, l) f_lambda f_mu.
InducedModule span_induced(const InducedSetup& s);

// Matrices of x -> x r and x -> a x on W; InvariantViolation if W is not preserved.
RFMatrix right_operator_matrix(const InducedModule& w, const Element& r);
RFMatrix left_operator_matrix(const InducedModule& w, const Element& a);

RFMatrix j_matrix(const InducedSetup& s, const InducedModule& w);

// J - r I singular
bool is_eigenvalue(const RFMatrix& j, const RationalFunction& r);

// prod over (a,b) in lambda of (t - q^{-2(mu_{i_a}+lambda*_b-i_a-b+1)}) / (t - q^{2b-2a})
template <class T>
T r_xi(const Partition& lambda, const Partition& mu, const std::vector<int>& iseq, const T& t) {
  if (lambda.size() < 1) throw InvalidInput("lambda must be nonempty");
  xi_partition(lambda, mu, iseq);
  const Partition ls = lambda.conjugate();
  T r(1);
  for (const auto& [a, b] : lambda.nodes()) {
    const int ia = iseq[static_cast<std::size_t>(a - 1)];
    const T d = t - q_as<T>(2 * b - 2 * a);
    if (coeff_is_zero(d)) throw DivisionByZero("r_xi: t hits a pole");
    r *= (t - q_as<T>(-2 * (mu.part(ia) + ls.part(b) - ia - b + 1))) / d;
  }
  return r;
}

// prod over (a,b) in lambda of (t - q^{2(lambda_a+mu*_{j_b}-a-j_b+1)}) / (t - q^{2b-2a})
template <class T>
T r_eta(const Partition& lambda, const Partition& mu, const std::vector<int>& jseq, const T& t) {
  if (lambda.size() < 1) throw InvalidInput("lambda must be nonempty");
  eta_partition(lambda, mu, jseq);
  const Partition ms = mu.conjugate();
  T r(1);
  for (const auto& [a, b] : lambda.nodes()) {
    const int jb = jseq[static_cast<std::size_t>(b - 1)];
    const T d = t - q_as<T>(2 * b - 2 * a);
    if (coeff_is_zero(d)) throw DivisionByZero("r_eta: t hits a pole");
    r *= (t - q_as<T>(2 * (lambda.part(a) + ms.part(jb) - a - jb + 1))) / d;
  }
  return r;
}

// r_eta obtained from r_xi for the conjugate shapes by q -> q^{-1}, t fixed.
RationalFunction r_eta_via_beta(const Partition& lambda, const Partition& mu, const std::vector<int>& jseq,
                                const Rational& t);

// alpha(Qbar_lambda G_Xi) F_M Fbar_column T_tau^{-1}; needs Lambda = column tableau.
Element eigenvector_D(const InducedSetup& s, const std::vector<int>& iseq);

struct Prediction {
  std::string kind;  // "xi" or "eta"
  std::vector<int> sequence;
  Partition shape;
  RationalFunction value;
  bool determinant_ok = false;
  bool has_eigenvector = false;  // only xi with Lambda = column tableau
  bool eigenvector_ok = false;
  bool ok() const { return determinant_ok && (!has_eigenvector || eigenvector_ok); }
};

struct EigenReport {
  InducedSetup setup;
  int dimension = 0;
  bool j_commutes = false;
  std::vector<Prediction> predictions;
  bool ok() const;
};

// Every admissible xi and eta prediction, checked against J.  Restrict with
// a nonempty iseq / jseq.
EigenReport eigen_report(const InducedSetup& s, const std::vector<int>& iseq = {}, const std::vector<int>& jseq = {});

// r_xi (iseq = 1..lambda*_1) over r_eta (jseq = 1..lambda_1) against the mixed hook product.
template <class T>
struct MixedHookReport {
  T from_eigenvalues, from_hooks;
  bool holds() const { return from_eigenvalues == from_hooks; }
};

template <class T>
MixedHookReport<T> corollary11(const Partition& lambda, const Partition& mu, const T& t) {
  std::vector<int> iseq, jseq;
  for (int a = 1; a <= lambda.rows(); ++a) iseq.push_back(a);
  for (int b = 1; b <= lambda.part(1); ++b) jseq.push_back(b);
  return {r_xi(lambda, mu, iseq, t) / r_eta(lambda, mu, jseq, t), mixed_hook_ratio(lambda, mu, t)};
}

}  // namespace hecke
