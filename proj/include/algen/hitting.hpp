#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algen/circuit.hpp"
#include "algen/generator.hpp"
#include "algen/linalg.hpp"
#include "algen/sparse_poly.hpp"

namespace algen {

struct HittingSet {
  std::vector<std::vector<Rat>> points;
  std::string provenance;  // trivial-grid | gen-grid | derand | bootstrap | tau
  std::map<std::string, std::string> params;
};

/// Points whose monomial-evaluation vectors (all |e| <= degree) have full
/// rank M = binom(k+degree, degree); coefficients of any f in P(k, degree)
/// are then linear in the evaluations f(a_i).
struct InterpolatingSet {
  int k = 0;
  int degree = 0;
  std::vector<std::vector<Rat>> points;  // exactly M of them
};

/// Full grid S^nvars; fools individual degree <= |S|-1 regardless of size.
/// Points are ordered by graded-lex index vectors. Throws if |S| <= d or the
/// grid exceeds enum_cap.
HittingSet trivial_grid_hitting_set(int nvars, int d, const std::vector<Rat>& S,
                                    size_t enum_cap = 1000000);

/// Greedy scan of the grid {0,...,deg(Q)+n}^k in graded-lex order, accepting
/// points with Q != 0 whose monomial row increases the rank. Q must be a
/// nonzero k-variate polynomial. Exhaustion signals a bug and throws.
InterpolatingSet interpolating_set_with_constraint(int k, int n,
                                                   const SparsePoly& Q);

/// Exact nullspace of coefficients(C) -> coefficients(C o G) over the
/// monomial basis of degree <= D in n+1 variables. Returns a depth-2 circuit
/// annihilating G, or nullopt when the kernel is trivial. The returned
/// circuit is re-verified to compose to zero.
std::optional<Circuit> find_annihilator(const GeneratorMap& g, int D,
                                        long degree_cap = 1000000,
                                        size_t term_cap = 4000000);

/// Renders a sparse polynomial as a depth-2 circuit (monomial products into
/// one weighted sum).
Circuit circuit_from_poly(const SparsePoly& p);

/// Nonzero k-variate polynomial of individual degree <= d_ind vanishing on
/// every point of H; requires (d_ind+1)^k > |H|. Empty H yields constant 1.
SparsePoly hard_poly_from_hitting_set(const HittingSet& h, int k, int d_ind);

struct PitResult {
  bool nonzero = false;                      // verdict
  std::optional<std::vector<Rat>> witness;   // set iff nonzero
  int trials = 0;                            // random mode only
  std::string error_bound;                   // random mode only, "p/q"
};

/// Scans H in order; first nonzero evaluation is the witness. A zero-on-H
/// verdict equals identically-zero only when H fools the circuit's class.
PitResult pit_deterministic(const Circuit& c, const HittingSet& h);

/// Schwartz-Zippel sampler over {0,...,2*degree_bound}^nvars; reproducible
/// under seed. Reported per-run error bound is (D/(2D+1))^trials.
PitResult pit_random(const Circuit& c, long degree_bound, int trials,
                     uint64_t seed);

/// Parameter calculator for the derandomization pipeline; the values are
/// astronomically large and are reported as big integers, never enumerated.
struct DerandParams {
  int t = 0;
  Int d;                  // smallest d with d > s^{(10tk+2)t}
  Int d_prime;            // (k*t) * ceil(d^{1/t})
  Int hitting_set_size;   // (s*d' + 1)^{2tk}
  size_t size_bits = 0;   // bit length of the cardinality
};
DerandParams derand_params(unsigned long s, const Rat& delta, int k);

/// Desk-scale instantiation: un-Kronecker P into t blocks, build the
/// generator with n+1 components, enumerate Gen_Q over the grid
/// {0,...,s*deg(Q)}^{2kt}. Throws CapExceeded past enum_cap.
HittingSet derand_pipeline(const SparsePoly& p, long s, int t, int n,
                           size_t enum_cap = 1000000);

/// Chains Heintz-Schnorr extraction (hard poly of individual degree <= s
/// vanishing on h_small) into derand_pipeline. Requires |h_small| < (s+1)^k.
HittingSet bootstrap_pipeline(const HittingSet& h_small, int k, long s, int t,
                              int n, size_t enum_cap = 1000000);

struct TauReport {
  SparsePoly p_d;        // (x-1)...(x-d), exact
  Int max_abs_coeff;
  Int coeff_bound;       // d^d * d!
  HittingSet hset;       // Gen of the un-Kroneckered P_d over [s*deg(Q)+1]^{2t}
  size_t max_coord_bits = 0;
};

/// The conditional tau-conjecture pipeline at desk scale.
TauReport tau_pipeline(int d, long s, int t, size_t enum_cap = 1000000);

/// Enumerates {0,...,side-1}^k as rational points in graded-lex order.
std::vector<std::vector<Rat>> graded_grid(int k, int side, size_t cap);

}  // namespace algen
