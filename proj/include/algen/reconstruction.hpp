#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algen/circuit.hpp"
#include "algen/generator.hpp"
#include "algen/hitting.hpp"
#include "algen/sparse_poly.hpp"

namespace algen {

/// Holds every partial derivative d_{z^e} P_ell recovered so far, for
/// |e| <= n and ell <= max_degree. Entries that are identically zero may be
/// absent; lookups treat them as zero.
struct ReconstructionState {
  int k = 0;
  int n = 0;
  int max_degree = -1;  // highest homogeneous component recovered
  // partials[ell][e] = d_{z^e} P_ell  (k-variate, homogeneous of deg ell-|e|)
  std::map<int, std::map<ExpVec, SparsePoly, GrlexLess>> partials;

  SparsePoly partial(int ell, const ExpVec& e) const;
  /// Sum of recovered components P_0 + ... + P_{max_degree}.
  SparsePoly assembled() const;
};

struct PreprocessResult {
  Circuit cp;        // d^i C / d x_n^i with the zero/nonzero switch at i
  int order = 0;     // the i found by the ascending scan
  GeneratorMap gen;  // the generator actually used (n shrinks in Case 1)
};

/// Finds the non-degenerate derivative of an annihilating circuit: the
/// smallest i with (d^i C) o Gen = 0 and (d^{i+1} C) o Gen != 0. When C
/// becomes independent of the last coordinate under the generator, a value
/// from {0,...,D} is substituted and the search recurses on the smaller
/// instance. Throws std::domain_error when C o Gen != 0 (C is fooled) or C
/// expands to zero.
PreprocessResult preprocess(const Circuit& c, const GeneratorMap& g, int D,
                            long degree_cap, size_t term_cap);

/// Smallest point of {0,...,d*D}^k (graded-lex) whose shifted generator has
/// Psi != 0. Existence follows from the nonzeroness of (d x_n Cp) o Gen.
std::vector<Rat> find_shift(const Circuit& cp, const GeneratorMap& g, int d,
                            int D, long degree_cap, size_t term_cap);

/// Seeds the state from the advice components P_0..P_n (of the shifted
/// polynomial) by direct differentiation. Each advice entry must be
/// homogeneous of its index degree.
ReconstructionState base_case(const std::vector<SparsePoly>& advice, int n);

/// One iteration of the inductive recovery: consumes the state at step j-1
/// and produces P_{n+j} with all its order <= n partials. good_points and
/// psi_values come from an interpolating set constrained by Psi != 0;
/// lambda_inv is the inverse of its monomial-evaluation matrix.
struct StepCheck {
  int j = 0;
  bool residual_zero = true;   // lemma recheck against ground truth, if given
  bool alpha_equals_psi = true;
  bool a_square_vanishes = true;
};
StepCheck inductive_step(ReconstructionState& state, const Circuit& cp, int j,
                         const InterpolatingSet& good_points,
                         const std::vector<Rat>& psi_values,
                         const RatMat& lambda_inv, long degree_cap,
                         size_t term_cap,
                         const SparsePoly* ground_truth_shifted = nullptr);

/// Size accounting that mirrors the proof's additive blow-up; informational
/// only (the induction itself runs on truncated polynomials).
struct ReconstructionLedger {
  Int base_size;           // N^2
  Int per_step_increment;  // N^10 + s'N + (N^10 + s'N) * d^2
  Int total;               // base + (d-n) * increment
};
ReconstructionLedger size_ledger_report(int n, int k, const Int& s_prime,
                                        int d);

struct ReconstructionResult {
  SparsePoly recovered;
  std::vector<Rat> shift;   // the translation point a
  int derivative_order = 0;
  std::vector<StepCheck> steps;
  ReconstructionLedger ledger;
};

/// End-to-end executable form of the main theorem: preprocess, shift,
/// base case from advice, d-n inductive steps, unshift. The advice (the low
/// homogeneous components the proof assumes access to) is derived from
/// g.source after the shift is known; when verify is set, every step is
/// rechecked against the ground truth.
ReconstructionResult reconstruct(const Circuit& c, const GeneratorMap& g,
                                 int D, long degree_cap, size_t term_cap,
                                 bool verify = true);

}  // namespace algen
