#include <doctest.h>

#include <random>

#include "hecke/algebra.hpp"

using namespace hecke;

namespace {

RationalFunction q(int k) { return q_pow(k); }
const RationalFunction h = q(1) - q(-1);

Element T(int l, int i) { return Element::gen(l, i); }
Element one(int l) { return Element::unit(l); }

Element random_element(std::mt19937& rng, int l, int terms) {
  const auto& g = SymmetricGroup::get(l);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  Element a(l);
  for (int k = 0; k < terms; ++k) a[pick(rng)] += q(e(rng)) * RationalFunction(c(rng)) + RationalFunction(c(rng));
  return a;
}

// sum_{sigma,tau} a_sigma b_tau T_{w(sigma) w(tau)}, one letter at a time
Element naive_product(const Element& a, const Element& b) {
  const int l = a.rank();
  const auto& g = a.group();
  Element r(l);
  for (std::size_t s : a.support())
    for (std::size_t t : b.support()) {
      auto w = g.perm(s).reduced_word();
      auto wt = g.perm(t).reduced_word();
      w.insert(w.end(), wt.begin(), wt.end());
      r.add_scaled(t_letters(l, w), a[s] * b[t]);
    }
  return r;
}

// A random reduced word: strip a random right descent at each step.
std::vector<int> random_reduced_word(std::mt19937& rng, const Permutation& p) {
  std::vector<int> v = p.images(), w;
  for (;;) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i));
    if (d.empty()) break;
    const int i = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
    w.push_back(i + 1);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_CASE("group tables") {
  for (int n = 1; n <= 6; ++n) {
    const auto& g = SymmetricGroup::get(n);
    CHECK(g.perm(0).is_identity());
    CHECK(g.perm(g.longest()) == longest_element(n));
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.index(g.perm(i)) == i);
      if (i + 1 < g.order()) CHECK(g.length(i) <= g.length(i + 1));
      if (i > 0) {
        CHECK(g.length(g.right_parent(i)) + 1 == g.length(i));
        CHECK(g.length(g.left_parent(i)) + 1 == g.length(i));
      }
    }
  }
  CHECK_THROWS_AS(SymmetricGroup::get(0), InvalidInput);
}

TEST_CASE("basic products") {
  CHECK(T(2, 1) * T(2, 1) == one(2) + T(2, 1) * h);
  CHECK(one(3) * T(3, 2) == T(3, 2));
  CHECK(T(3, 1) * T(3, 2) * T(3, 1) == T(3, 2) * T(3, 1) * T(3, 2));
  CHECK(t_word(2, longest_element(2)) == T(2, 1));
  CHECK(t_word(3, Permutation::identity(3)) == one(3));
  CHECK(t_letters(3, {1, 2, 1}) == t_letters(3, {2, 1, 2}));
  CHECK(t_letters(3, {1, 2, 1}) == Element::basis(3, longest_element(3)));
  CHECK_THROWS_AS(T(2, 1) * T(3, 1), InvalidInput);
  CHECK_THROWS_AS(T(2, 2), InvalidInput);
}

TEST_CASE("presentation relations up to rank 6") {
  for (int l = 2; l <= 6; ++l)
    for (int i = 1; i < l; ++i) {
      Element ti = T(l, i);
      CHECK((ti - one(l) * q(1)) * (ti + one(l) * q(-1)) == Element(l));
      for (int j = 1; j < l; ++j) {
        Element tj = T(l, j);
        if (j == i + 1) CHECK(ti * tj * ti == tj * ti * tj);
        if (std::abs(i - j) >= 2) CHECK(ti * tj == tj * ti);
      }
    }
}

TEST_CASE("T_sigma does not depend on the reduced word") {
  std::mt19937 rng(2024);
  for (int l = 2; l <= 5; ++l) {
    const auto& g = SymmetricGroup::get(l);
    for (std::size_t s = 0; s < g.order(); ++s) {
      const auto w = random_reduced_word(rng, g.perm(s));
      CHECK(static_cast<int>(w.size()) == g.length(s));
      CHECK(t_letters(l, w) == Element::basis(l, s));
    }
  }
}

TEST_CASE("product agrees with letter-by-letter expansion and is associative") {
  std::mt19937 rng(99);
  for (int l = 2; l <= 4; ++l)
    for (int trial = 0; trial < 6; ++trial) {
      Element a = random_element(rng, l, 1 + trial), b = random_element(rng, l, 6 - trial), c = random_element(rng, l, 3);
      CHECK(a * b == naive_product(a, b));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverse basis elements") {
  CHECK(inv_basis(2, Permutation::identity(2)) == one(2));
  CHECK(inv_basis(2, longest_element(2)) == T(2, 1) - one(2) * q(1) + one(2) * q(-1));
  const auto& g = SymmetricGroup::get(4);
  for (std::size_t s = 0; s < g.order(); ++s) {
    CHECK(t_word(4, g.perm(s)) * inv_basis(4, g.perm(s)) == one(4));
    CHECK(inv_basis(4, g.perm(s)) * t_word(4, g.perm(s)) == one(4));
  }
}

TEST_CASE("Murphy elements") {
  CHECK(murphy(3, 1) == one(3));
  CHECK(murphy(2, 2) == one(2) + T(2, 1) * h);
  for (int l = 2; l <= 5; ++l) {
    std::vector<Element> X;
    for (int i = 1; i <= l; ++i) X.push_back(murphy(l, i));
    for (int i = 1; i <= l; ++i) {
      CHECK(X[i - 1] * murphy_inverse(l, i) == one(l));
      for (int j = i + 1; j <= l; ++j) CHECK(X[i - 1] * X[j - 1] == X[j - 1] * X[i - 1]);
      for (int k = 1; k < l; ++k)
        if (i != k && i != k + 1) CHECK(T(l, k) * X[i - 1] == X[i - 1] * T(l, k));
    }
    // images of the affine relation T_i Y_i T_i = Y_{i+1}
    const RationalFunction z = q(2) * 3;
    for (int i = 1; i < l; ++i)
      CHECK(T(l, i) * evaluation_murphy(l, i, z) * T(l, i) == evaluation_murphy(l, i + 1, z));
  }
  CHECK(evaluation_murphy(2, 2, q(2)) == T(2, 1) * T(2, 1) * q(2));
  CHECK(evaluation_murphy(3, 1, q(5)) == one(3) * q(5));
  CHECK_THROWS_AS(evaluation_murphy(2, 1, RationalFunction()), InvalidInput);
}

TEST_CASE("symmetric functions of Murphy elements are central") {
  for (int l = 2; l <= 4; ++l) {
    Element e1(l), e2(l);
    for (int i = 1; i <= l; ++i) {
      e1 += murphy(l, i);
      for (int j = i + 1; j <= l; ++j) e2 += murphy(l, i) * murphy(l, j);
    }
    for (int k = 1; k < l; ++k) {
      CHECK(T(l, k) * e1 == e1 * T(l, k));
      CHECK(T(l, k) * e2 == e2 * T(l, k));
    }
    // a single X_2 is not central once l >= 3
    if (l >= 3) CHECK_FALSE(T(l, 2) * murphy(l, 2) == murphy(l, 2) * T(l, 2));
  }
}

TEST_CASE("alpha and beta") {
  CHECK(alpha(T(2, 1)) == T(2, 1));
  CHECK(alpha(T(3, 1) * T(3, 2)) == T(3, 2) * T(3, 1));
  CHECK(alpha(murphy(3, 3)) == murphy(3, 3));
  CHECK(beta(T(2, 1)) == -T(2, 1));
  CHECK(beta(one(2) * q(1)) == one(2) * q(-1));
  std::mt19937 rng(5);
  for (int l = 2; l <= 4; ++l)
    for (int trial = 0; trial < 4; ++trial) {
      Element a = random_element(rng, l, 4), b = random_element(rng, l, 4);
      CHECK(alpha(a * b) == alpha(b) * alpha(a));
      CHECK(beta(a * b) == beta(a) * beta(b));
      CHECK(alpha(alpha(a)) == a);
      CHECK(beta(beta(a)) == a);
    }
  for (int i = 1; i <= 4; ++i) CHECK(alpha(murphy(4, i)) == murphy(4, i));
}

TEST_CASE("embeddings") {
  CHECK(embed_low(T(2, 1), 3) == T(3, 1));
  CHECK(embed_shift(T(2, 1), 1, 3) == T(3, 2));
  CHECK(embed_shift(murphy(2, 2), 2, 4) == T(4, 3) * T(4, 3));
  CHECK_THROWS_AS(embed_shift(T(3, 1), 1, 3), InvalidInput);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    Element a = random_element(rng, 3, 3), b = random_element(rng, 3, 3);
    CHECK(embed_shift(a * b, 2, 5) == embed_shift(a, 2, 5) * embed_shift(b, 2, 5));
    CHECK(embed_low(a * b, 4) == embed_low(a, 4) * embed_low(b, 4));
  }
}

TEST_CASE("symmetrizers") {
  CHECK(p_symmetrizer(Partition({1, 1, 1})) == one(3));
  CHECK(q_antisymmetrizer(Partition({2})) == one(2));
  // P_(2) = 1 + q^{-1} T_1^{-1} = q^{-1} T_1 + q^{-2}
  CHECK(p_symmetrizer(Partition({2})) == T(2, 1) * q(-1) + one(2) * q(-2));
  for (int l = 1; l <= 5; ++l)
    for (const auto& lambda : partitions_of(l)) {
      Element P = p_symmetrizer(lambda), Q = q_antisymmetrizer(lambda);
      const auto rows = young_subgroup_elements(lambda, YoungArrangement::rows);
      const auto cols = young_subgroup_elements(lambda, YoungArrangement::columns);
      CHECK(static_cast<long long>(rows.size()) > 0);
      for (int k = 1; k < l; ++k) {
        const Permutation sk = Permutation::simple(l, k);
        if (std::find(rows.begin(), rows.end(), sk) != rows.end()) {
          CHECK(T(l, k) * P == P * q(1));
          CHECK(P * T(l, k) == P * q(1));
        }
        if (std::find(cols.begin(), cols.end(), sk) != cols.end()) {
          CHECK(T(l, k) * Q == Q * -q(-1));
          CHECK(Q * T(l, k) == Q * -q(-1));
        }
      }
    }
}

TEST_CASE("sum identities over the whole group") {
  for (int l = 1; l <= 4; ++l) {
    const auto& g = SymmetricGroup::get(l);
    Element lhs1(l), rhs1(l), lhs2(l), rhs2(l);
    for (std::size_t s = 0; s < g.order(); ++s) {
      const int k = g.length(s);
      const RationalFunction sign(k % 2 ? -1 : 1);
      lhs1.add_scaled(inv_basis(l, g.perm(s)), q(-k));
      rhs1.add_scaled(Element::basis(l, s), q(k));
      lhs2.add_scaled(inv_basis(l, g.perm(s)), sign * q(k));
      rhs2.add_scaled(Element::basis(l, s), sign * q(-k));
    }
    const int e = l * (l - 1);
    CHECK(lhs1 == rhs1 * q(-e));
    CHECK(lhs2 == rhs2 * q(e));  // (-q)^{l(l-1)} = q^{l(l-1)}
    if (l >= 2) CHECK_FALSE(lhs1 == rhs1 * q(1 - e));
  }
}
