#pragma once

// V_lambda on the basis {G_t}: generator matrices from the explicit action of
// T_k, characters, and the checks built on them.

#include <map>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

using RFMatrix = Matrix<RationalFunction>;

struct SeminormalRep {
  Partition shape;
  std::vector<StandardTableau> basis;
  // generators[k-1] represents T_k; column j holds T_k G_{basis[j]}.
  std::vector<RFMatrix> generators;

  int rank() const { return shape.size(); }
  int dimension() const { return static_cast<int>(basis.size()); }
  int index_of(const StandardTableau& t) const;
  // Image of T_sigma, built along reduced words.
  RFMatrix basis_image(const Permutation& sigma) const;
  RFMatrix represent(const Element& a) const;
};

// Diagonal and off-diagonal entries of T_k on G_t, by d_k(t).
RationalFunction action_diagonal(int d);
RationalFunction action_offdiagonal(int d);

// Builds and verifies the quadratic, braid and commutation relations;
// InvariantViolation when one fails.
SeminormalRep build_rep(const Partition& lambda);

// Matrices only, without the relation checks.
SeminormalRep build_rep_unchecked(const Partition& lambda);

// Relations (T-q)(T+q^{-1}) = 0, braid and far commutation for a matrix family.
bool satisfies_hecke_relations(const std::vector<RFMatrix>& gens);

RationalFunction character(const SeminormalRep& rep, const Element& a);

// sum_lambda phi_lambda(T_sigma^{-1}) / h_lambda == [sigma = 1] for every sigma in S_l
bool check_delta_expansion(int l);

// Represented X_i are diagonal with q^{2c_i(t)}; content vectors pairwise distinct.
bool check_murphy_diagonal(const SeminormalRep& rep);

// For every removable corner: the tableaux with l in that row span an
// H_{l-1}-invariant block equal to build_rep of the smaller shape.
bool check_branching(const SeminormalRep& rep);

// Solve T_k G_t in the G basis and compare with the generator matrices.
bool compare_with_ideal_model(const SeminormalRep& rep);

// At q = 1: Coxeter relations and Jucys-Murphy elements sum_{j<i} (j i)
// diagonal with entries c_i(t).
bool check_classical_limit(const SeminormalRep& rep);

// Coefficient vectors of the G_t have rank f_lambda and lie in H_l F_column.
bool check_g_basis(const Partition& lambda);

}  // namespace hecke
