#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algen/transforms.hpp"
#include "test_util.hpp"

using namespace algen;

namespace {

// coefficient of var^j, as a polynomial with var's exponent zeroed
SparsePoly coeff_of(const SparsePoly& p, int var, int j) {
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != j) continue;
    ExpVec r = e;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

SparsePoly expand1(const Circuit& c) { return expand_to_poly(c, 64, 200000)[0]; }

Circuit square_circuit(int nvars) {
  Circuit c(nvars);
  int x0 = c.add_input(0), x1 = c.add_input(1);
  int s = c.add_add({{Rat(1), x0}, {Rat(1), x1}});
  c.set_outputs({c.add_mul({Rat(1), s}, {Rat(1), s})});
  return c;
}

}  // namespace

TEST_CASE("coefficient extraction") {
  Circuit c = square_circuit(2);  // (x0+x1)^2
  SizeLedger ledger;
  Circuit cc = coefficient_circuits(c, 1, 2, &ledger);
  auto outs = expand_to_poly(cc, 64, 100000);
  REQUIRE(outs.size() == 3);
  CHECK(outs[0] == SparsePoly::monomial({2, 0}, Rat(1)));
  CHECK(outs[1] == SparsePoly::monomial({1, 0}, Rat(2)));
  CHECK(outs[2] == SparsePoly::constant(2, Rat(1)));
  CHECK(ledger.holds());
  CHECK(ledger.budget_value == (2 + 1) * c.size() + 3 * (2 + 1) * (2 + 1));

  // circuit independent of the variable
  Circuit ind(2);
  ind.set_outputs({ind.add_input(0)});
  auto outs2 = expand_to_poly(coefficient_circuits(ind, 1, 2), 64, 1000);
  CHECK(outs2[0] == SparsePoly::variable(2, 0));
  CHECK(outs2[1].is_zero());
  CHECK(outs2[2].is_zero());

  Circuit just_var(2);
  just_var.set_outputs({just_var.add_input(1)});
  auto outs3 = expand_to_poly(coefficient_circuits(just_var, 1, 1), 64, 1000);
  CHECK(outs3[0].is_zero());
  CHECK(outs3[1] == SparsePoly::constant(2, Rat(1)));
}

TEST_CASE("derivative circuits") {
  Circuit cube(2);
  int x1 = cube.add_input(1);
  int sq = cube.add_mul({Rat(1), x1}, {Rat(1), x1});
  cube.set_outputs({cube.add_mul({Rat(1), sq}, {Rat(1), x1})});
  CHECK(expand1(derivative_circuit(cube, 1, 2, 3)) ==
        SparsePoly::monomial({0, 1}, Rat(6)));

  Circuit ann(3);
  int a0 = ann.add_input(0), a1 = ann.add_input(1), a2 = ann.add_input(2);
  int m1 = ann.add_mul({Rat(3), a0}, {Rat(1), a2});
  int m2 = ann.add_mul({Rat(1), a1}, {Rat(1), a1});
  ann.set_outputs({ann.add_add({{Rat(1), m1}, {Rat(-1), m2}})});
  CHECK(expand1(derivative_circuit(ann, 2, 1, 2)) ==
        SparsePoly::monomial({1, 0, 0}, Rat(3)));

  CHECK(expand1(derivative_circuit(cube, 1, 5, 3)).is_zero());
}

TEST_CASE("strassen homogenization") {
  Circuit c(1);  // (x0+1)*x0
  int x0 = c.add_input(0);
  int one = c.add_const(Rat(1));
  int s = c.add_add({{Rat(1), x0}, {Rat(1), one}});
  c.set_outputs({c.add_mul({Rat(1), s}, {Rat(1), x0})});
  SizeLedger ledger;
  HomogeneousCircuit h = strassen_homogenize(c, 2, &ledger);
  auto outs = expand_to_poly(h.circuit, 64, 100000);
  REQUIRE(outs.size() == 3);
  CHECK(outs[0].is_zero());
  CHECK(outs[1] == SparsePoly::variable(1, 0));
  CHECK(outs[2] == SparsePoly::monomial({2}, Rat(1)));
  CHECK(ledger.holds());
  CHECK(ledger.budget_value == c.size() * (2 + 1) * (2 + 2));

  Circuit m(2);
  m.set_outputs(
      {m.add_mul({Rat(1), m.add_input(0)}, {Rat(1), m.add_input(1)})});
  auto houts = expand_to_poly(strassen_homogenize(m, 3).circuit, 64, 1000);
  CHECK(houts[0].is_zero());
  CHECK(houts[1].is_zero());
  CHECK(houts[2] == SparsePoly::monomial({1, 1}, Rat(1)));
  CHECK(houts[3].is_zero());

  Circuit k(1);
  k.set_outputs({k.add_const(Rat(5))});
  auto kouts = expand_to_poly(strassen_homogenize(k, 2).circuit, 64, 1000);
  CHECK(kouts[0] == SparsePoly::constant(1, Rat(5)));
  CHECK(kouts[1].is_zero());
  CHECK(kouts[2].is_zero());
}

TEST_CASE("partial homogenization") {
  // B outputs (z, z^2); Cp = x0*x1 + x0 -> slices (0, z, 0, z^3)
  Circuit b(1);
  int z = b.add_input(0);
  int z2 = b.add_mul({Rat(1), z}, {Rat(1), z});
  b.set_outputs({z, z2});
  HomogeneousCircuit base{b, {1, 2}};

  Circuit cp(2);
  int p0 = cp.add_input(0), p1 = cp.add_input(1);
  int mul = cp.add_mul({Rat(1), p0}, {Rat(1), p1});
  cp.set_outputs({cp.add_add({{Rat(1), mul}, {Rat(1), p0}})});

  SizeLedger ledger;
  HomogeneousCircuit h = partial_homogenize(base, cp, 3, &ledger);
  auto outs = expand_to_poly(h.circuit, 64, 100000);
  REQUIRE(outs.size() == 4);
  CHECK(outs[0].is_zero());
  CHECK(outs[1] == SparsePoly::variable(1, 0));
  CHECK(outs[2].is_zero());
  CHECK(outs[3] == SparsePoly::monomial({3}, Rat(1)));
  CHECK(ledger.holds());
  CHECK(ledger.budget_value == b.size() + cp.size() * (3 + 1) * (3 + 2));

  // Cp identity: slices are the base outputs at their degrees
  Circuit id(2);
  int i0 = id.add_input(0), i1 = id.add_input(1);
  id.set_outputs({i0, i1});
  auto id_outs = expand_to_poly(partial_homogenize(base, id, 2).circuit, 64,
                                1000);
  REQUIRE(id_outs.size() == 6);
  CHECK(id_outs[1] == SparsePoly::variable(1, 0));
  CHECK(id_outs[5] == SparsePoly::monomial({2}, Rat(1)));

  // Cp constant: only the degree-0 slice
  Circuit cst(2);
  cst.set_outputs({cst.add_const(Rat(7))});
  auto c_outs = expand_to_poly(partial_homogenize(base, cst, 2).circuit, 64,
                               1000);
  CHECK(c_outs[0] == SparsePoly::constant(1, Rat(7)));
  CHECK(c_outs[1].is_zero());
  CHECK(c_outs[2].is_zero());
}

TEST_CASE("randomized semantics and ledgers") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = 2 + static_cast<int>(rng() % 2);
    Circuit c = testutil::random_circuit(rng, nvars, 8, 12 + rng() % 28);
    SparsePoly p = expand1(c);
    int D = static_cast<int>(c.max_syntactic_degree());

    int var = static_cast<int>(rng() % nvars);
    SizeLedger lc;
    auto coeffs = expand_to_poly(coefficient_circuits(c, var, D, &lc), 64,
                                 400000);
    for (int j = 0; j <= D; ++j) CHECK(coeffs[j] == coeff_of(p, var, j));
    CHECK(lc.holds());

    int order = static_cast<int>(rng() % 3);
    ExpVec e(nvars, 0);
    e[var] = order;
    SizeLedger ld;
    CHECK(expand1(derivative_circuit(c, var, order, D, &ld)) ==
          partial_derivative(p, e));
    CHECK(ld.holds());

    SizeLedger lh;
    HomogeneousCircuit h = strassen_homogenize(c, D, &lh);
    auto slices = expand_to_poly(h.circuit, 64, 400000);
    for (int j = 0; j <= D; ++j) {
      CHECK(slices[j] == homogeneous_part(p, j));
      if (!slices[j].is_zero()) CHECK(slices[j].degree() == j);
    }
    CHECK(lh.holds());
  }
}
