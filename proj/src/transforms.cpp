#include "algen/transforms.hpp"

#include <functional>
#include <stdexcept>

#include "algen/linalg.hpp"

namespace algen {

namespace {

// Copies all gates of src into dst with Input(var) replaced by Const(value).
// Returns the new id of src's single output.
int copy_with_var_fixed(const Circuit& src, Circuit& dst, int var,
                        const Rat& value) {
  std::vector<int> remap(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    const GateKind& g = src.gates()[i];
    if (const auto* in = std::get_if<InputGate>(&g)) {
      remap[i] = in->var == var ? dst.add_const(value)
                                : dst.add_input(in->var);
    } else if (const auto* k = std::get_if<ConstGate>(&g)) {
      remap[i] = dst.add_const(k->value);
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      std::vector<WireIn> ws;
      ws.reserve(a->children.size());
      for (const auto& w : a->children) ws.push_back({w.weight, remap[w.gate]});
      remap[i] = dst.add_add(std::move(ws));
    } else {
      const auto& m = std::get<MulGate>(g);
      remap[i] = dst.add_mul({m.lhs.weight, remap[m.lhs.gate]},
                             {m.rhs.weight, remap[m.rhs.gate]});
    }
  }
  if (src.outputs().size() != 1)
    throw std::invalid_argument("transform requires a single-output circuit");
  return remap[src.outputs()[0]];
}

void fill_ledger(SizeLedger* ledger, const std::string& pass, size_t in_size,
                 size_t out_size, const std::string& formula, size_t budget) {
  if (!ledger) return;
  ledger->pass = pass;
  ledger->input_size = in_size;
  ledger->output_size = out_size;
  ledger->budget_formula = formula;
  ledger->budget_value = budget;
}

}  // namespace

Circuit coefficient_circuits(const Circuit& c, int var, int D,
                             SizeLedger* ledger) {
  if (D < 0) throw std::invalid_argument("coefficient_circuits: D < 0");
  Circuit out(c.nvars());
  std::vector<int> roots;
  roots.reserve(D + 1);
  for (int e = 0; e <= D; ++e)
    roots.push_back(copy_with_var_fixed(c, out, var, Rat(e)));

  // Vandermonde at nodes 0..D; row j of the inverse extracts coefficient j.
  RatMat vand(D + 1, D + 1);
  for (int i = 0; i <= D; ++i) {
    Rat p(1);
    for (int j = 0; j <= D; ++j) {
      vand.at(i, j) = p;
      p *= i;
    }
  }
  RatMat vinv = inverse(vand);
  std::vector<int> outs;
  for (int j = 0; j <= D; ++j) {
    std::vector<WireIn> ws;
    for (int i = 0; i <= D; ++i)
      if (vinv.at(j, i) != 0) ws.push_back({vinv.at(j, i), roots[i]});
    if (ws.empty()) ws.push_back({Rat(0), roots[0]});
    outs.push_back(out.add_add(std::move(ws)));
  }
  out.set_outputs(outs);
  fill_ledger(ledger, "coefficient_circuits", c.size(), out.size(),
              "(D+1)*s + 3*(D+1)^2",
              static_cast<size_t>(D + 1) * c.size() +
                  3 * static_cast<size_t>(D + 1) * (D + 1));
  return out;
}

Circuit derivative_circuit(const Circuit& c, int var, int order, int D,
                           SizeLedger* ledger) {
  if (order < 0) throw std::invalid_argument("derivative_circuit: order < 0");
  const size_t budget = static_cast<size_t>(D + 1) * c.size() +
                        3 * static_cast<size_t>(D + 1) * (D + 1);
  if (order > D) {
    Circuit zero(c.nvars());
    zero.set_outputs({zero.add_const(Rat(0))});
    fill_ledger(ledger, "derivative_circuit", c.size(), zero.size(),
                "(D+1)*s + 3*(D+1)^2", budget);
    return zero;
  }
  Circuit out = coefficient_circuits(c, var, D);
  std::vector<int> coef = out.outputs();

  std::vector<int> var_pow(D - order + 1, -1);  // var^m gate ids
  if (D - order >= 1) {
    var_pow[1] = out.add_input(var);
    for (int m = 2; m <= D - order; ++m)
      var_pow[m] =
          out.add_mul({Rat(1), var_pow[m - 1]}, {Rat(1), var_pow[1]});
  }
  std::vector<WireIn> ws;
  for (int j = order; j <= D; ++j) {
    Rat fall(factorial(j) / factorial(j - order));  // j!/(j-order)!
    if (j == order) {
      ws.push_back({fall, coef[j]});
    } else {
      int prod = out.add_mul({Rat(1), coef[j]}, {Rat(1), var_pow[j - order]});
      ws.push_back({fall, prod});
    }
  }
  out.set_outputs({out.add_add(std::move(ws))});
  fill_ledger(ledger, "derivative_circuit", c.size(), out.size(),
              "(D+1)*s + 3*(D+1)^2", budget);
  return out;
}

namespace {

// Shared slicing pass: walks src and builds degree slices 0..d in dst.
// leaf_slices(var) supplies the slice ids for Input gates. Returns, per src
// gate, the dst gate id of each slice (zero_id where identically zero).
std::vector<std::vector<int>> homogenize_gates(
    const Circuit& src, Circuit& dst, int d, int zero_id,
    const std::function<std::vector<int>(int)>& leaf_slices) {
  std::vector<std::vector<int>> slices(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    const GateKind& g = src.gates()[i];
    std::vector<int> s(d + 1, zero_id);
    if (const auto* in = std::get_if<InputGate>(&g)) {
      s = leaf_slices(in->var);
    } else if (const auto* k = std::get_if<ConstGate>(&g)) {
      s[0] = dst.add_const(k->value);
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      for (int deg = 0; deg <= d; ++deg) {
        std::vector<WireIn> ws;
        for (const auto& w : a->children) {
          int child = slices[w.gate][deg];
          if (child != zero_id) ws.push_back({w.weight, child});
        }
        if (!ws.empty()) s[deg] = dst.add_add(std::move(ws));
      }
    } else {
      const auto& m = std::get<MulGate>(g);
      for (int deg = 0; deg <= d; ++deg) {
        std::vector<WireIn> ws;
        for (int b = 0; b <= deg; ++b) {
          int lb = slices[m.lhs.gate][b];
          int rb = slices[m.rhs.gate][deg - b];
          if (lb == zero_id || rb == zero_id) continue;
          ws.push_back(
              {Rat(1), dst.add_mul({m.lhs.weight, lb}, {m.rhs.weight, rb})});
        }
        if (ws.size() == 1 && ws[0].weight == 1)
          s[deg] = ws[0].gate;
        else if (!ws.empty())
          s[deg] = dst.add_add(std::move(ws));
      }
    }
    slices[i] = std::move(s);
  }
  return slices;
}

}  // namespace

HomogeneousCircuit strassen_homogenize(const Circuit& c, int d,
                                       SizeLedger* ledger) {
  if (d < 0) throw std::invalid_argument("strassen_homogenize: d < 0");
  if (c.outputs().size() != 1)
    throw std::invalid_argument("strassen_homogenize: single-output only");
  Circuit dst(c.nvars());
  int zero_id = dst.add_const(Rat(0));
  auto slices = homogenize_gates(c, dst, d, zero_id, [&](int var) {
    std::vector<int> s(d + 1, zero_id);
    if (d >= 1) s[1] = dst.add_input(var);
    return s;
  });
  dst.set_outputs(slices[c.outputs()[0]]);
  HomogeneousCircuit hc{std::move(dst), {}};
  for (int j = 0; j <= d; ++j) hc.output_degrees.push_back(j);
  fill_ledger(ledger, "strassen_homogenize", c.size(), hc.circuit.size(),
              "s*(d+1)*(d+2)",
              c.size() * static_cast<size_t>(d + 1) * (d + 2));
  return hc;
}

HomogeneousCircuit partial_homogenize(const HomogeneousCircuit& base,
                                      const Circuit& cp, int d,
                                      SizeLedger* ledger) {
  if (d < 0) throw std::invalid_argument("partial_homogenize: d < 0");
  if (cp.nvars() != static_cast<int>(base.circuit.outputs().size()))
    throw std::invalid_argument(
        "partial_homogenize: cp arity != base output count");
  // base gates are kept verbatim (ids preserved), new gates stacked on top
  Circuit dst = base.circuit;
  int zero_id = dst.add_const(Rat(0));
  auto slices = homogenize_gates(cp, dst, d, zero_id, [&](int var) {
    std::vector<int> s(d + 1, zero_id);
    int deg = base.output_degrees[var];
    if (deg > d)
      throw std::invalid_argument(
          "partial_homogenize: base output degree exceeds d");
    s[deg] = base.circuit.outputs()[var];
    return s;
  });
  std::vector<int> outs;
  HomogeneousCircuit hc{Circuit(0), {}};
  for (int cp_out : cp.outputs()) {
    for (int j = 0; j <= d; ++j) {
      outs.push_back(slices[cp_out][j]);
      hc.output_degrees.push_back(j);
    }
  }
  dst.set_outputs(outs);
  hc.circuit = std::move(dst);
  fill_ledger(ledger, "partial_homogenize", base.circuit.size() + cp.size(),
              hc.circuit.size(), "s_base + s_cp*(d+1)*(d+2)",
              base.circuit.size() +
                  cp.size() * static_cast<size_t>(d + 1) * (d + 2));
  return hc;
}

}  // namespace algen
