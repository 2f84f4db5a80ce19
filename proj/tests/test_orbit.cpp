#include "doctest.h"

#include <random>

#include "trunsym/orbit.hpp"

using namespace trunsym;

namespace {

SymPolynomial P(std::vector<int> parts, const FieldSpec& F) {
  return SymPolynomial::monomial(Partition(std::move(parts)), F.one(), F);
}

Partition random_partition(std::mt19937& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int k = deg(rng);
  std::vector<int> parts;
  int cap = k;
  for (int i = 0; i < n && k > 0; ++i) {
    std::uniform_int_distribution<int> part(k / (n - i) + (k % (n - i) ? 1 : 0), cap);
    int p = part(rng);
    parts.push_back(p);
    cap = p;
    k -= p;
  }
  parts.resize(n, 0);
  return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("Partition accessors and display") {
  Partition a({4, 4, 2, 0});
  CHECK(a.degree() == 10);
  CHECK(a.weight() == 3);
  CHECK(a.leading_multiplicity() == 2);
  CHECK(a.orbit_size() == 12);
  CHECK(a.to_string() == "P[4,4,2]");
  CHECK(Partition({0, 0}).to_string() == "P[0]");
  CHECK(Partition::parse("P[4,4,2]", 4) == a);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("Q[1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("P[1,1,1]", 2), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates the box") {
  auto all = partitions_of(4, 3);
  CHECK(all.size() == 4);  // (4), (3,1), (2,2), (2,1,1)
  CHECK(all.front() == Partition({4, 0, 0}));
  CHECK(all.back() == Partition({2, 1, 1}));
  CHECK(partitions_of(3, 2, 1).empty());
  CHECK(partitions_of(0, 2).size() == 1);
}

TEST_CASE("orbit_mul: P_1 * P_1 in two variables") {
  FieldSpec Q = FieldSpec::rationals();
  auto prod = orbit_mul(Partition({1, 0}), Partition({1, 0}), Q);
  CHECK(prod.coeff(Partition({1, 1})) == 2);
  CHECK(prod.coeff(Partition({2, 0})) == 1);
  CHECK(prod.terms().size() == 2);

  auto prod2 = orbit_mul(Partition({1, 0}), Partition({1, 0}), FieldSpec(2));
  CHECK(prod2 == P({2, 0}, FieldSpec(2)));  // 2 P_{1,1} drops mod 2
}

TEST_CASE("orbit_mul: single way (2,0)+(1,1)") {
  auto prod = orbit_mul(Partition({2, 0}), Partition({1, 1}), FieldSpec::rationals());
  CHECK(prod == P({3, 1}, FieldSpec::rationals()));
}

TEST_CASE("orbit_mul matches the leading-multiplicity formula") {
  // P_{a_1} * P_{a_2..a_r} contains P_{a_1..a_r} with coefficient s, the
  // leading multiplicity of (a_1, ..., a_r)
  FieldSpec Q = FieldSpec::rationals();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 3;
    Partition c = random_partition(rng, n, 6);
    if (c.degree() == 0) continue;
    std::vector<int> head(n, 0), tail(c.parts());
    head[0] = tail.front();
    tail.erase(tail.begin());
    tail.push_back(0);
    auto prod = orbit_mul(Partition(head), Partition(tail), Q);
    CHECK(prod.coeff(c) == c.leading_multiplicity());
  }
}

TEST_CASE("orbit_mul grades and stays non-negative over Q") {
  std::mt19937 rng(5);
  FieldSpec Q = FieldSpec::rationals();
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 3;
    Partition a = random_partition(rng, n, 5), b = random_partition(rng, n, 5);
    auto prod = orbit_mul(a, b, Q);
    for (const auto& [c, v] : prod.terms()) {
      CHECK(c.degree() == a.degree() + b.degree());
      CHECK(v > 0);
      CHECK(boost::multiprecision::denominator(v) == 1);
    }
  }
}

TEST_CASE("oracle equivalence on random pairs") {
  std::mt19937 rng(17);
  for (const auto& F : {FieldSpec::rationals(), FieldSpec(2), FieldSpec(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + trial % 3;
      Partition a = random_partition(rng, n, 5), b = random_partition(rng, n, 5);
      auto direct = orbit_mul(a, b, F);
      auto oracle = symmetrize(dense_mul(expand_to_monomials(P(a.parts(), F)),
                                         expand_to_monomials(P(b.parts(), F))));
      CHECK(direct == oracle);
    }
  }
}

TEST_CASE("sym_mul: identity, oracle-derived values, Frobenius") {
  FieldSpec Q = FieldSpec::rationals();
  auto f = P({2, 1}, Q) + P({1, 1}, Q).scaled(Scalar(3));
  CHECK(sym_mul(f, P({0, 0}, Q)) == f);

  // (P_1)^2 - 2 P_{1,1} = P_2
  auto sq = sym_mul(P({1, 0}, Q), P({1, 0}, Q));
  CHECK(sq - P({1, 1}, Q).scaled(Scalar(2)) == P({2, 0}, Q));

  FieldSpec F2(2);
  CHECK(sym_mul(P({2, 0, 0}, F2), P({2, 0, 0}, F2)) == P({4, 0, 0}, F2));
}

TEST_CASE("sym_mul is commutative and associative") {
  std::mt19937 rng(23);
  FieldSpec F3(3);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 2;
    auto f = P(random_partition(rng, n, 4).parts(), F3) +
             P(random_partition(rng, n, 4).parts(), F3).scaled(Scalar(2));
    auto g = P(random_partition(rng, n, 4).parts(), F3);
    auto h = P(random_partition(rng, n, 4).parts(), F3);
    CHECK(sym_mul(f, g) == sym_mul(g, f));
    CHECK(sym_mul(sym_mul(f, g), h) == sym_mul(f, sym_mul(g, h)));
  }
}

TEST_CASE("power_sum and elementary_symmetric") {
  FieldSpec Q = FieldSpec::rationals();
  CHECK(power_sum(1, 2, Q) == P({1, 0}, Q));
  auto e = expand_to_monomials(power_sum(3, 2, Q));
  CHECK(e.terms().size() == 2);
  CHECK(e.coeff({3, 0}) == 1);
  CHECK(e.coeff({0, 3}) == 1);

  CHECK(elementary_symmetric(1, 2, Q) == P({1, 0}, Q));
  CHECK(elementary_symmetric(3, 3, Q) == P({1, 1, 1}, Q));
  auto s2 = expand_to_monomials(elementary_symmetric(2, 3, Q));
  CHECK(s2.terms().size() == 3);
  CHECK(s2.coeff({1, 1, 0}) == 1);
  CHECK_THROWS_AS(elementary_symmetric(4, 3, Q), std::invalid_argument);
}

TEST_CASE("newton_next reproduces power sums") {
  FieldSpec Q = FieldSpec::rationals();
  for (int n : {2, 3}) {
    for (int m = 0; m <= 3; ++m) {
      std::vector<SymPolynomial> known;
      for (int i = 1; i <= n; ++i) known.push_back(power_sum(m + i, n, Q));
      CHECK(newton_next(known, n, Q) == power_sum(m + n + 1, n, Q));
    }
  }
  CHECK_THROWS_AS(newton_next({power_sum(1, 2, Q)}, 2, Q), std::invalid_argument);
  CHECK_THROWS_AS(newton_next({power_sum(1, 2, Q), power_sum(3, 2, Q)}, 2, Q),
                  std::invalid_argument);
}

TEST_CASE("expand_to_monomials term counts") {
  FieldSpec Q = FieldSpec::rationals();
  auto e1 = expand_to_monomials(P({1, 1}, Q));
  CHECK(e1.terms().size() == 1);
  CHECK(e1.coeff({1, 1}) == 1);
  CHECK(expand_to_monomials(P({2, 1, 0}, Q)).terms().size() == 6);
  CHECK(expand_to_monomials(P({1, 1, 1}, Q)).terms().size() == 1);
}

TEST_CASE("symmetrize: inverse of expansion, rejects asymmetric input") {
  FieldSpec Q = FieldSpec::rationals();
  DensePolynomial g(2, Q);
  g.add_term({1, 1}, Q.one());
  CHECK(symmetrize(g) == P({1, 1}, Q));

  DensePolynomial bad(2, Q);
  bad.add_term({1, 0}, Q.one());
  CHECK_THROWS_AS(symmetrize(bad), NotSymmetricError);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 3;
    auto f = P(random_partition(rng, n, 6).parts(), Q).scaled(Scalar(1 + trial % 5)) +
             P(random_partition(rng, n, 6).parts(), Q);
    CHECK(symmetrize(expand_to_monomials(f)) == f);
  }
}

TEST_CASE("dense_mul basics") {
  FieldSpec Q = FieldSpec::rationals();
  auto lin = expand_to_monomials(P({1, 0}, Q));
  auto sq = dense_mul(lin, lin);
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({0, 2}) == 1);
  CHECK(dense_mul(lin, DensePolynomial(2, Q)).is_zero());
}
