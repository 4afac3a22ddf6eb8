#include <doctest.h>

#include <random>

#include "hecke/fusion.hpp"
#include "hecke/seminormal.hpp"

using namespace hecke;

namespace {

RationalFunction q(int k) { return q_pow(k); }

}  // namespace

TEST_CASE("one-dimensional modules") {
  const SeminormalRep row = build_rep(Partition({2}));
  const SeminormalRep col = build_rep(Partition({1, 1}));
  CHECK(row.generators.front()(0, 0) == q(1));
  CHECK(col.generators.front()(0, 0) == -q(-1));
  CHECK(character(row, Element::gen(2, 1)) == q(1));
  CHECK(character(row, Element::unit(2)) == RationalFunction(1));
  CHECK(row.represent(murphy(2, 2))(0, 0) == q(2));
  CHECK(col.represent(murphy(2, 2))(0, 0) == q(-2));
  const SeminormalRep one = build_rep(Partition({1}));
  CHECK(one.dimension() == 1);
  CHECK(one.generators.empty());
}

TEST_CASE("action coefficients") {
  CHECK(action_diagonal(-1) == q(1));
  CHECK(action_diagonal(1) == -q(-1));
  CHECK(action_offdiagonal(1) == RationalFunction());
  CHECK(action_offdiagonal(2) == RationalFunction(1));
  CHECK(action_offdiagonal(-2) * unitarity_scalar(q(0), q(4)).inverse() == RationalFunction(1));
  CHECK_THROWS_AS(action_diagonal(0), InvalidInput);
}

TEST_CASE("relations for every shape up to five boxes") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      CAPTURE(lambda.to_string());
      const SeminormalRep rep = build_rep(lambda);
      CHECK(rep.dimension() == standard_tableau_count(lambda));
      CHECK(check_murphy_diagonal(rep));
      CHECK(check_branching(rep));
      CHECK(check_classical_limit(rep));
      CHECK(character(rep, Element::unit(n)) == RationalFunction(rep.dimension()));
    }
}

TEST_CASE("relation coefficients perturbed by q fail") {
  SeminormalRep rep = build_rep_unchecked(Partition({2, 1}));
  CHECK(satisfies_hecke_relations(rep.generators));
  // T_1 is diagonal here; scale the first off-diagonal entry of T_2
  auto& m = rep.generators[1];
  bool scaled = false;
  for (int i = 0; i < rep.dimension() && !scaled; ++i)
    for (int j = 0; j < rep.dimension() && !scaled; ++j)
      if (i != j && !m(i, j).is_zero()) {
        m(i, j) *= q(1);
        scaled = true;
      }
  REQUIRE(scaled);
  CHECK_FALSE(satisfies_hecke_relations(rep.generators));
  SeminormalRep r2 = build_rep_unchecked(Partition({2, 2}));
  r2.generators[1](0, 0) *= q(1);
  CHECK_FALSE(satisfies_hecke_relations(r2.generators));
}

TEST_CASE("left ideal model agrees with the matrices") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_of(n)) {
      CAPTURE(lambda.to_string());
      CHECK(compare_with_ideal_model(build_rep(lambda)));
      CHECK(check_g_basis(lambda));
    }
  CHECK(compare_with_ideal_model(build_rep(Partition({3, 2}))));
  CHECK(check_g_basis(Partition({2, 2, 1})));
}

TEST_CASE("characters") {
  const SeminormalRep rep = build_rep(Partition({2, 1}));
  // trace of T_1: q on [[1,2],[3]] and -q^{-1} on [[1,3],[2]]
  CHECK(character(rep, Element::gen(3, 1)) == q(1) - q(-1));
  // class function: phi(a b) = phi(b a)
  const Element a = Element::gen(3, 1) + Element::gen(3, 2) * q(2);
  const Element b = murphy(3, 3) + Element::gen(3, 1) * RationalFunction(3);
  CHECK(character(rep, a * b) == character(rep, b * a));
  // regular trace: sum_lambda f_lambda phi_lambda(T_sigma) = 0 for sigma != 1 at q = 1
  for (const auto& lambda : partitions_of(3)) CHECK(character(build_rep(lambda), Element::unit(3)) == RationalFunction(standard_tableau_count(lambda)));
}

TEST_CASE("delta expansion") {
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    CHECK(check_delta_expansion(l));
  }
}

TEST_CASE("linear algebra helpers") {
  RFMatrix m(2, 2);
  m(0, 0) = q(1);
  m(0, 1) = RationalFunction(1);
  m(1, 0) = RationalFunction(1);
  m(1, 1) = q(-1);
  CHECK(rank(m) == 1);
  CHECK(determinant(m).is_zero());
  CHECK(nullspace(m).size() == 1);
  m(1, 1) = RationalFunction(2);
  CHECK(determinant(m) == q(1) * 2 - 1);
  const auto x = solve(m, {RationalFunction(1), RationalFunction(0)});
  REQUIRE(x);
  CHECK(m * *x == std::vector<RationalFunction>{RationalFunction(1), RationalFunction(0)});
  RowReducer<RationalFunction> rr(3);
  CHECK(rr.add({RationalFunction(1), q(1), RationalFunction()}));
  CHECK(rr.add({RationalFunction(), RationalFunction(1), RationalFunction(1)}));
  CHECK_FALSE(rr.add({RationalFunction(1), q(1) + 1, RationalFunction(1)}));
  CHECK(rr.rank() == 2);
}

TEST_CASE("singularity by evaluation matches elimination") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  auto entry = [&] {
    if (c(rng) == 0) return RationalFunction();
    const RationalFunction num = q(e(rng)) * c(rng) + c(rng);
    const RationalFunction den = q(e(rng)) + (c(rng) == 0 ? 5 : 2);
    return num / den;
  };
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      RFMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = entry();
      if (trial == 3 && n > 1)
        for (int j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * q(1) + m(1 % n, j);
      RFMatrix u = m;
      int sign = 1;
      const auto piv = detail::echelon(u, &sign);
      RationalFunction expected;
      if (static_cast<int>(piv.size()) == n) {
        expected = RationalFunction(sign);
        for (int i = 0; i < n; ++i) expected *= u(i, i);
      }
      const RationalFunction d = determinant(m);
      CHECK(d == expected);
      CHECK(is_singular(m) == d.is_zero());
      if (trial == 3 && n > 1) CHECK(is_singular(m));
      const Rational q0(3, 2);
      const auto mq = m.map([&](const RationalFunction& f) { return specialize_q(f, q0); });
      CHECK(determinant(mq) == specialize_q(d, q0));
    }
}
