#pragma once

#include <string>
#include <vector>

#include "algen/circuit.hpp"

namespace algen {

/// Gate-count accounting for a transformation pass. The budget instantiates
/// the pass's asymptotic bound with fixed constants; output_size must not
/// exceed it.
struct SizeLedger {
  std::string pass;
  size_t input_size = 0;
  size_t output_size = 0;
  std::string budget_formula;
  size_t budget_value = 0;

  bool holds() const { return output_size <= budget_value; }
};

/// A circuit together with the declared degree of each output. Used by the
/// homogenization passes, whose outputs are homogeneous slices.
struct HomogeneousCircuit {
  Circuit circuit;
  std::vector<int> output_degrees;
};

/// Extracts the coefficients of var^0..var^D of a single-output circuit as a
/// (D+1)-output circuit over the same inputs: D+1 copies of c evaluated at
/// var = 0..D, recombined through the exact inverse Vandermonde. Requires
/// deg_var(c) <= D for semantic correctness (not checked at runtime).
/// Budget: (D+1)*s + 3*(D+1)^2.
Circuit coefficient_circuits(const Circuit& c, int var, int D,
                             SizeLedger* ledger = nullptr);

/// d^order c / d var^order as a circuit, built from coefficient_circuits by
/// the recombination  sum_{j>=order} j!/(j-order)! * coef_j * var^{j-order}.
/// order > D yields the zero circuit.
Circuit derivative_circuit(const Circuit& c, int var, int order, int D,
                           SizeLedger* ledger = nullptr);

/// Strassen homogenization: replaces each gate by slices 0..d; Add slices
/// componentwise, Mul slices by convolution. Output j expands to the
/// degree-j homogeneous part of the input's single output.
/// Budget: s*(d+1)*(d+2).
HomogeneousCircuit strassen_homogenize(const Circuit& c, int d,
                                       SizeLedger* ledger = nullptr);

/// Homogenizes only cp, atop the already-homogeneous multi-output base:
/// leaves of cp reading input i become the base output i placed at its
/// declared degree. Outputs: for each cp output, slices 0..d.
/// Budget: s_base + s_cp*(d+1)*(d+2).
HomogeneousCircuit partial_homogenize(const HomogeneousCircuit& base,
                                      const Circuit& cp, int d,
                                      SizeLedger* ledger = nullptr);

}  // namespace algen
