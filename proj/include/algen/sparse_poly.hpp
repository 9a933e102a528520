#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "algen/rational.hpp"

namespace algen {

/// Exponent vector of a monomial; length is the variable count.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

/// Graded lexicographic order: first by total degree, then lex.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial with exact rational coefficients, stored sparsely.
/// Invariant: no zero coefficients are kept; all keys have length nvars().
class SparsePoly {
 public:
  using TermMap = std::map<ExpVec, Rat, GrlexLess>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rat& c);
  static SparsePoly variable(int nvars, int index);
  /// Single monomial c * x^e.
  static SparsePoly monomial(ExpVec e, const Rat& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(int var) const;
  /// Max degree of any single variable; -1 for the zero polynomial.
  int individual_degree() const;

  Rat coeff(const ExpVec& e) const;
  void add_term(const ExpVec& e, const Rat& c);

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rat& c) const;
  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const std::vector<Rat>& point) const;

  /// Partial substitution: vars with subs[i] set are replaced by constants,
  /// the rest stay symbolic. subs.size() must equal nvars().
  SparsePoly substitute(const std::vector<const Rat*>& subs) const;

  /// Keeps only the variables in `keep` (all others must not occur).
  SparsePoly project_vars(const std::vector<int>& keep) const;

 private:
  void check_same_vars(const SparsePoly& o) const;

  int nvars_;
  TermMap terms_;
};

inline SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

/// Iterated partial derivative d^{|e|} p / dz^e.
SparsePoly partial_derivative(const SparsePoly& p, const ExpVec& e);

/// Homogeneous part of total degree exactly j.
SparsePoly homogeneous_part(const SparsePoly& p, int j);

/// Canonical representative of p modulo the ideal of degree->=m monomials:
/// drops every term of total degree >= m.
SparsePoly truncate_mod_ideal(const SparsePoly& p, int m);

/// P(z + a), exact.
SparsePoly taylor_shift(const SparsePoly& p, const std::vector<Rat>& a);

/// Degree-i-in-y component of the Taylor expansion of P(z+y):
///   sum over |e| = i of (y^e / e!) * d_{z^e} P.
/// Result lives in 2k variables: z_0..z_{k-1}, y_0..y_{k-1}.
SparsePoly delta(const SparsePoly& p, int i);

/// Lists all e in Z_{>=0}^k with |e| == deg, in graded-lex order.
std::vector<ExpVec> exponents_of_degree(int k, int deg);
/// Lists all e with |e| <= deg, in graded-lex order.
std::vector<ExpVec> exponents_up_to_degree(int k, int deg);

/// Euler descent: given all order-n partials of a homogeneous polynomial of
/// degree t (keyed by e with |e| = n), recovers every lower-order partial via
///   d_{z^e} P = 1/(t-|e|) * sum_i z_i * d_{z^{e+delta_i}} P.
/// Returns partials for all |e| <= n; the |e|=0 entry is P itself.
/// Throws std::domain_error if t < n (descent would divide by zero).
std::map<ExpVec, SparsePoly, GrlexLess> euler_descend(
    const std::map<ExpVec, SparsePoly, GrlexLess>& order_n_partials, int t,
    int n);

/// Kronecker lift: maps a k-variate p to k*t variables, exponent e of z_i
/// becoming base-b digits spread over z_{i,0..t-1} (variable index i*t+j).
/// Requires every individual degree < b^t.
SparsePoly kronecker_lift(const SparsePoly& p, int t, int b);
/// Inverse substitution z_{i,j} := z_i^{b^j}; q must have k*t variables.
SparsePoly kronecker_project(const SparsePoly& q, int t, int b);

/// Text format: header "poly nvars=<k>", then one term per line:
/// "<coeff> <e_1> ... <e_k>". Round-trips exactly.
std::string poly_to_text(const SparsePoly& p);
SparsePoly poly_from_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace algen
