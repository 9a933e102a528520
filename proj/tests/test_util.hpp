#pragma once

#include <random>
#include <vector>

#include "algen/circuit.hpp"
#include "algen/sparse_poly.hpp"

namespace algen::testutil {

inline SparsePoly random_poly(std::mt19937_64& rng, int k, int max_deg,
                              int max_terms, int coeff_bound = 9) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> deg(0, max_deg);
  SparsePoly p(k);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    ExpVec e(k, 0);
    for (int r = 0; r < d; ++r) e[rng() % k]++;
    int c = coeff(rng);
    if (c != 0) p.add_term(e, Rat(c));
  }
  return p;
}

inline SparsePoly random_nonzero_poly(std::mt19937_64& rng, int k, int max_deg,
                                      int max_terms) {
  for (;;) {
    SparsePoly p = random_poly(rng, k, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline std::vector<Rat> random_point(std::mt19937_64& rng, int k,
                                     int bound = 5) {
  std::uniform_int_distribution<int> v(-bound, bound);
  std::vector<Rat> pt;
  for (int i = 0; i < k; ++i) pt.emplace_back(v(rng));
  return pt;
}

/// Random single-output DAG over nvars inputs with syntactic degree kept
/// under max_deg and at most max_gates gates.
inline Circuit random_circuit(std::mt19937_64& rng, int nvars, int max_deg,
                              size_t max_gates) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  Circuit c(nvars);
  for (int i = 0; i < nvars; ++i) c.add_input(i);
  c.add_const(Rat(coeff(rng)));
  while (c.size() < max_gates) {
    int pick = static_cast<int>(rng() % (c.size()));
    int pick2 = static_cast<int>(rng() % (c.size()));
    if (rng() % 2 == 0) {
      Rat w1(coeff(rng)), w2(coeff(rng));
      if (w1 == 0) w1 = 1;
      c.add_add({{w1, pick}, {w2, pick2}});
    } else {
      if (c.syntactic_degree(pick) + c.syntactic_degree(pick2) > max_deg)
        continue;
      c.add_mul({Rat(1), pick}, {Rat(1), pick2});
    }
  }
  c.set_outputs({static_cast<int>(c.size()) - 1});
  return c;
}

}  // namespace algen::testutil
