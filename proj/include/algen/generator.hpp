#pragma once

#include <optional>
#include <vector>

#include "algen/circuit.hpp"
#include "algen/sparse_poly.hpp"

namespace algen {

/// The polynomial map (Delta_0(P), ..., Delta_n(P)) : F^k x F^k -> F^{n+1}.
/// Each component lives in 2k variables: z_0..z_{k-1}, y_0..y_{k-1}.
struct GeneratorMap {
  int k = 0;
  int n = 0;
  int d = 0;                          // deg of the source polynomial
  SparsePoly source;                  // P itself (k variables)
  std::vector<SparsePoly> components;  // n+1 entries, 2k variables each
};

GeneratorMap build_gen(const SparsePoly& p, int n);

/// Exact evaluation of all components at a point in Q^{2k}.
std::vector<Rat> gen_eval(const GeneratorMap& g,
                          const std::vector<Rat>& point);

/// Generator of the shifted polynomial P(z + a); componentwise this equals
/// the original components with z := z + a.
GeneratorMap shift_gen(const GeneratorMap& g, const std::vector<Rat>& a);

/// C(Delta_0, ..., Delta_n) as a 2k-variate polynomial, exact or reduced
/// mod <z>^m per gate (z being the first k variables) when truncate_mod is
/// set.
SparsePoly compose(const Circuit& c, const GeneratorMap& g, long degree_cap,
                   size_t term_cap,
                   std::optional<int> truncate_mod = std::nullopt);

/// Psi(y) = (d_{x_n} C') composed with the generator, evaluated at z = 0.
/// Returns a k-variate polynomial in the y block.
SparsePoly psi(const Circuit& cp, const GeneratorMap& g, long degree_cap,
               size_t term_cap);

}  // namespace algen
