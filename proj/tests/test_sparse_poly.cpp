#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algen/circuit.hpp"
#include "algen/sparse_poly.hpp"
#include "test_util.hpp"

using namespace algen;
using testutil::random_nonzero_poly;
using testutil::random_poly;

namespace {

SparsePoly zpow(int k, int var, int e) {
  ExpVec ev(k, 0);
  ev[var] = e;
  return SparsePoly::monomial(ev, Rat(1));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  SparsePoly z = SparsePoly::variable(1, 0);
  SparsePoly one = SparsePoly::constant(1, Rat(1));
  CHECK((z + one) * (z - one) == zpow(1, 0, 2) - one);
  SparsePoly q = zpow(2, 0, 2) * zpow(2, 1, 1);
  CHECK(q.eval({Rat(2), Rat(3)}) == Rat(12));
  std::mt19937_64 rng(1);
  SparsePoly p = random_poly(rng, 2, 5, 8);
  CHECK((p + (-p)).is_zero());
  CHECK(SparsePoly(1).degree() == -1);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(zpow(1, 0, 3), {1}) == zpow(1, 0, 2) * Rat(3));
  SparsePoly p = zpow(2, 0, 2) * zpow(2, 1, 1);
  CHECK(partial_derivative(p, {1, 1}) == SparsePoly::variable(2, 0) * Rat(2));
  CHECK(partial_derivative(zpow(1, 0, 3), {4}).is_zero());
}

TEST_CASE("delta components") {
  // (z+y)^2 = z^2 + 2zy + y^2
  SparsePoly d1 = delta(zpow(1, 0, 2), 1);
  CHECK(d1 == SparsePoly::monomial({1, 1}, Rat(2)));
  // (z+y)^3: degree-2-in-y term is 3zy^2
  CHECK(delta(zpow(1, 0, 3), 2) == SparsePoly::monomial({1, 2}, Rat(3)));
  // (z1+y1)(z2+y2): degree-1-in-y part is y1 z2 + y2 z1
  SparsePoly p = SparsePoly::variable(2, 0) * SparsePoly::variable(2, 1);
  SparsePoly expect(4);
  expect.add_term({0, 1, 1, 0}, Rat(1));
  expect.add_term({1, 0, 0, 1}, Rat(1));
  CHECK(delta(p, 1) == expect);
}

TEST_CASE("taylor shift") {
  SparsePoly shifted = taylor_shift(zpow(1, 0, 3), {Rat(1)});
  SparsePoly expect(1);
  expect.add_term({3}, Rat(1));
  expect.add_term({2}, Rat(3));
  expect.add_term({1}, Rat(3));
  expect.add_term({0}, Rat(1));
  CHECK(shifted == expect);
  CHECK(taylor_shift(SparsePoly::variable(1, 0), {Rat(0)}) ==
        SparsePoly::variable(1, 0));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    SparsePoly p = random_poly(rng, 3, 6, 10);
    std::vector<Rat> a = testutil::random_point(rng, 3);
    std::vector<Rat> na;
    for (const Rat& v : a) na.push_back(-v);
    CHECK(taylor_shift(taylor_shift(p, a), na) == p);
  }
}

TEST_CASE("homogeneous parts and truncation") {
  SparsePoly p = taylor_shift(zpow(1, 0, 3), {Rat(1)});  // 1+3z+3z^2+z^3
  CHECK(homogeneous_part(p, 2) == zpow(1, 0, 2) * Rat(3));
  SparsePoly trunc = truncate_mod_ideal(p, 2);
  SparsePoly expect(1);
  expect.add_term({0}, Rat(1));
  expect.add_term({1}, Rat(3));
  CHECK(trunc == expect);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    SparsePoly q = random_poly(rng, 2, 6, 10);
    SparsePoly sum(2);
    for (int j = 0; j <= q.degree(); ++j) sum = sum + homogeneous_part(q, j);
    CHECK(sum == q);
  }
}

TEST_CASE("euler identity and descent") {
  // A = z1^2 z2, homogeneous of degree 3
  SparsePoly A = zpow(2, 0, 2) * zpow(2, 1, 1);
  SparsePoly euler_sum(2);
  for (int i = 0; i < 2; ++i) {
    ExpVec e(2, 0);
    e[i] = 1;
    euler_sum =
        euler_sum + SparsePoly::variable(2, i) * partial_derivative(A, e);
  }
  CHECK(euler_sum == A * Rat(3));

  std::map<ExpVec, SparsePoly, GrlexLess> order1;
  order1[{1}] = zpow(1, 0, 2) * Rat(3);
  auto all = euler_descend(order1, 3, 1);
  CHECK(all.at({0}) == zpow(1, 0, 3));

  std::map<ExpVec, SparsePoly, GrlexLess> order2;
  for (const ExpVec& e : exponents_of_degree(2, 2))
    order2[e] = partial_derivative(A, e);
  auto rec = euler_descend(order2, 3, 2);
  for (const ExpVec& e : exponents_up_to_degree(2, 2))
    CHECK(rec.at(e) == partial_derivative(A, e));

  std::map<ExpVec, SparsePoly, GrlexLess> bad;
  bad[{2}] = SparsePoly::constant(1, Rat(2));
  CHECK_THROWS_AS(euler_descend(bad, 1, 2), std::domain_error);
}

TEST_CASE("kronecker lift and project") {
  SparsePoly lifted = kronecker_lift(zpow(1, 0, 3), 2, 2);
  CHECK(lifted == SparsePoly::monomial({1, 1}, Rat(1)));  // 3 = 1 + 1*2
  CHECK(kronecker_lift(zpow(1, 0, 5), 2, 3) ==
        SparsePoly::monomial({2, 1}, Rat(1)));  // 5 = 2 + 1*3
  CHECK_THROWS(kronecker_lift(zpow(1, 0, 4), 2, 2));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    SparsePoly p = random_poly(rng, 2, 8, 10);
    CHECK(kronecker_project(kronecker_lift(p, 3, 4), 3, 4) == p);
  }
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    SparsePoly p = random_poly(rng, 3, 6, 10);
    CHECK(poly_from_text(poly_to_text(p)) == p);
  }
  CHECK_THROWS(poly_from_text("poly nvars=1\nx 1\n"));
}

TEST_CASE("taylor completeness against bivariate substitution") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    SparsePoly p = random_nonzero_poly(rng, k, 6, 10);
    SparsePoly sum(2 * k);
    for (int i = 0; i <= p.degree(); ++i) sum = sum + delta(p, i);
    // substitute z := u, y := v and compare with P(u+v) at random points
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Rat> u = testutil::random_point(rng, k);
      std::vector<Rat> v = testutil::random_point(rng, k);
      std::vector<Rat> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      std::vector<Rat> w;
      for (int i = 0; i < k; ++i) w.push_back(u[i] + v[i]);
      CHECK(sum.eval(uv) == p.eval(w));
    }
  }
}

TEST_CASE("delta shift covariance") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + static_cast<int>(rng() % 2);
    SparsePoly p = random_nonzero_poly(rng, k, 5, 8);
    std::vector<Rat> a = testutil::random_point(rng, k);
    std::vector<Rat> a2k = a;
    a2k.resize(2 * k, Rat(0));
    for (int i = 0; i <= p.degree(); ++i) {
      SparsePoly lhs = delta(taylor_shift(p, a), i);
      SparsePoly rhs = taylor_shift(delta(p, i), a2k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("delta mod-ideal covariance") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + static_cast<int>(rng() % 2);
    SparsePoly p = random_nonzero_poly(rng, k, 6, 8);
    int j = 2 + static_cast<int>(rng() % 4);
    SparsePoly q = p + SparsePoly::monomial(ExpVec(k, 0), Rat(0));
    // perturb q by something in <z>^j
    ExpVec high(k, 0);
    high[0] = j + static_cast<int>(rng() % 2);
    q = q + SparsePoly::monomial(high, Rat(1 + static_cast<int>(rng() % 5)));
    REQUIRE(truncate_mod_ideal(p - q, j).is_zero());
    for (int i = 0; i <= j; ++i) {
      // the ideal is generated by the z block (first k variables)
      SparsePoly diff = delta(p, i) - delta(q, i);
      CHECK(truncate_block(diff, TruncateSpec{j - i, k}).is_zero());
    }
  }
}
