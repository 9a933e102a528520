#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algen/sparse_poly.hpp"

namespace algen {

/// Child reference with a multiplicative edge constant.
struct WireIn {
  Rat weight;
  int gate;
};

struct InputGate {
  int var;
};
struct ConstGate {
  Rat value;
};
/// Weighted sum, fan-in >= 1.
struct AddGate {
  std::vector<WireIn> children;
};
/// Binary product; each operand scaled by its edge constant.
struct MulGate {
  WireIn lhs, rhs;
};

using GateKind = std::variant<InputGate, ConstGate, AddGate, MulGate>;

/// Multi-output algebraic-circuit DAG. Gates are topologically numbered:
/// every child id strictly precedes its parent. size() is the gate count,
/// independent of edge constants.
class Circuit {
 public:
  explicit Circuit(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  size_t size() const { return gates_.size(); }
  const std::vector<GateKind>& gates() const { return gates_; }
  const std::vector<int>& outputs() const { return outputs_; }

  int add_input(int var);
  int add_const(Rat value);
  int add_add(std::vector<WireIn> children);
  int add_mul(WireIn lhs, WireIn rhs);
  void set_outputs(std::vector<int> outs);

  /// Upper bound on the total degree of each gate's polynomial.
  long syntactic_degree(int gate) const;
  long max_syntactic_degree() const;

  std::vector<Rat> eval(const std::vector<Rat>& point) const;

 private:
  void check_child(int id) const;

  int nvars_;
  std::vector<GateKind> gates_;
  std::vector<int> outputs_;
};

struct CapExceeded : std::runtime_error {
  enum Kind { Degree, Terms } kind;
  CapExceeded(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

/// Expands every output into a SparsePoly over the circuit inputs.
/// Throws CapExceeded when an intermediate value exceeds either cap.
std::vector<SparsePoly> expand_to_poly(const Circuit& c, long degree_cap,
                                       size_t term_cap);

/// Truncation mod the ideal generated by the degree-m monomials in the first
/// prefix_vars variables (prefix_vars = -1 means all variables): drops every
/// term whose degree in that block is >= m.
struct TruncateSpec {
  int m;
  int prefix_vars = -1;
};

/// Drops all terms of p whose degree in the first spec.prefix_vars variables
/// is >= spec.m.
SparsePoly truncate_block(const SparsePoly& p, const TruncateSpec& spec);

/// Evaluates the DAG over SparsePoly operands: output j is the exact
/// composition C_j(subs[0], ..., subs[nvars-1]). When truncate_mod is set,
/// every gate value is reduced per the spec as it is computed (the
/// ideal-quotient homomorphism makes this equal to truncating the exact
/// result).
std::vector<SparsePoly> compose_circuit_with_polys(
    const Circuit& c, const std::vector<SparsePoly>& subs, long degree_cap,
    size_t term_cap, std::optional<TruncateSpec> truncate_mod = std::nullopt);

/// Line-oriented text format:
///   header nvars=<n>
///   g<id> = input x<j>
///   g<id> = const <p/q>
///   g<id> = add (<p/q>)*g<id> ...        (bare g<id> means weight 1)
///   g<id> = mul g<id> g<id> ...          (n-ary input is binarized)
///   out g<id> ...
/// '#' starts a comment. Children must be declared before use.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

}  // namespace algen
