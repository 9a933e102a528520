#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algen/generator.hpp"
#include "test_util.hpp"

using namespace algen;

namespace {

Circuit annihilator_3x0x2_minus_x1sq() {
  Circuit c(3);
  int x0 = c.add_input(0), x1 = c.add_input(1), x2 = c.add_input(2);
  int m1 = c.add_mul({Rat(3), x0}, {Rat(1), x2});
  int m2 = c.add_mul({Rat(1), x1}, {Rat(1), x1});
  c.set_outputs({c.add_add({{Rat(1), m1}, {Rat(-1), m2}})});
  return c;
}

SparsePoly zcube() { return SparsePoly::monomial({3}, Rat(1)); }

}  // namespace

TEST_CASE("build_gen") {
  GeneratorMap g = build_gen(zcube(), 2);
  CHECK(g.k == 1);
  CHECK(g.d == 3);
  REQUIRE(g.components.size() == 3);
  CHECK(g.components[0] == SparsePoly::monomial({3, 0}, Rat(1)));
  CHECK(g.components[1] == SparsePoly::monomial({2, 1}, Rat(3)));
  CHECK(g.components[2] == SparsePoly::monomial({1, 2}, Rat(3)));

  GeneratorMap lin = build_gen(SparsePoly::variable(1, 0), 1);
  CHECK(lin.components[0] == SparsePoly::monomial({1, 0}, Rat(1)));
  CHECK(lin.components[1] == SparsePoly::monomial({0, 1}, Rat(1)));

  GeneratorMap cst = build_gen(SparsePoly::constant(1, Rat(7)), 3);
  CHECK(cst.components[0] == SparsePoly::constant(2, Rat(7)));
  for (int i = 1; i <= 3; ++i) CHECK(cst.components[i].is_zero());
}

TEST_CASE("gen_eval") {
  GeneratorMap g = build_gen(zcube(), 2);
  CHECK(gen_eval(g, {Rat(1), Rat(1)}) ==
        std::vector<Rat>{Rat(1), Rat(3), Rat(3)});
  auto at_y0 = gen_eval(g, {Rat(2), Rat(0)});
  CHECK(at_y0 == std::vector<Rat>{Rat(8), Rat(0), Rat(0)});
  CHECK(gen_eval(g, {Rat(0), Rat(5)}) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("shift_gen") {
  GeneratorMap g = build_gen(zcube(), 2);
  GeneratorMap gs = shift_gen(g, {Rat(1)});
  SparsePoly zp1cubed(2);
  zp1cubed.add_term({3, 0}, Rat(1));
  zp1cubed.add_term({2, 0}, Rat(3));
  zp1cubed.add_term({1, 0}, Rat(3));
  zp1cubed.add_term({0, 0}, Rat(1));
  CHECK(gs.components[0] == zp1cubed);
  // components equal the z-shifted originals
  for (int i = 0; i <= 2; ++i)
    CHECK(gs.components[i] ==
          taylor_shift(g.components[i], {Rat(1), Rat(0)}));

  GeneratorMap same = shift_gen(g, {Rat(0)});
  for (int i = 0; i <= 2; ++i) CHECK(same.components[i] == g.components[i]);

  GeneratorMap back = shift_gen(gs, {Rat(-1)});
  for (int i = 0; i <= 2; ++i) CHECK(back.components[i] == g.components[i]);
}

TEST_CASE("compose") {
  GeneratorMap g = build_gen(zcube(), 2);
  CHECK(compose(annihilator_3x0x2_minus_x1sq(), g, 64, 100000).is_zero());

  Circuit proj(3);
  proj.add_input(0);
  proj.set_outputs({proj.add_input(1)});
  CHECK(compose(proj, g, 64, 100000) == SparsePoly::monomial({2, 1}, Rat(3)));

  GeneratorMap g2 = build_gen(SparsePoly::monomial({2}, Rat(1)), 1);
  Circuit prod(2);
  prod.set_outputs({prod.add_mul({Rat(1), prod.add_input(0)},
                                 {Rat(1), prod.add_input(1)})});
  CHECK(compose(prod, g2, 64, 100000) ==
        SparsePoly::monomial({3, 1}, Rat(2)));
}

TEST_CASE("psi") {
  Circuit c = annihilator_3x0x2_minus_x1sq();
  GeneratorMap g = build_gen(zcube(), 2);
  CHECK(psi(c, shift_gen(g, {Rat(1)}), 64, 100000) ==
        SparsePoly::constant(1, Rat(3)));
  CHECK(psi(c, g, 64, 100000).is_zero());

  Circuit last(3);
  last.add_input(0);
  last.add_input(1);
  last.set_outputs({last.add_input(2)});
  CHECK(psi(last, g, 64, 100000) == SparsePoly::constant(1, Rat(1)));
}

TEST_CASE("compose shift covariance") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    int k = 1 + static_cast<int>(rng() % 2);
    SparsePoly p = testutil::random_nonzero_poly(rng, k, 5, 6);
    int n = 1 + static_cast<int>(rng() % 3);
    GeneratorMap g = build_gen(p, n);
    Circuit c = testutil::random_circuit(rng, n + 1, 4, 8);
    std::vector<Rat> a = testutil::random_point(rng, k, 3);
    std::vector<Rat> a2k = a;
    a2k.resize(2 * k, Rat(0));
    CHECK(compose(c, shift_gen(g, a), 64, 400000) ==
          taylor_shift(compose(c, g, 64, 400000), a2k));
  }
}

TEST_CASE("truncated compose equals truncated exact compose") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    int k = 1 + static_cast<int>(rng() % 2);
    SparsePoly p = testutil::random_nonzero_poly(rng, k, 5, 6);
    int n = 1 + static_cast<int>(rng() % 3);
    GeneratorMap g = build_gen(p, n);
    Circuit c = testutil::random_circuit(rng, n + 1, 4, 8);
    int m = 1 + static_cast<int>(rng() % 4);
    CHECK(compose(c, g, 64, 400000, m) ==
          truncate_block(compose(c, g, 64, 400000), TruncateSpec{m, k}));
  }
}
