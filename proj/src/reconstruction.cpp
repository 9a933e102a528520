#include "algen/reconstruction.hpp"

#include <stdexcept>

#include "algen/transforms.hpp"

namespace algen {

SparsePoly ReconstructionState::partial(int ell, const ExpVec& e) const {
  auto it = partials.find(ell);
  if (it == partials.end()) return SparsePoly(k);
  auto jt = it->second.find(e);
  return jt == it->second.end() ? SparsePoly(k) : jt->second;
}

SparsePoly ReconstructionState::assembled() const {
  SparsePoly p(k);
  ExpVec zero(k, 0);
  for (int ell = 0; ell <= max_degree; ++ell) p = p + partial(ell, zero);
  return p;
}

PreprocessResult preprocess(const Circuit& c, const GeneratorMap& g, int D,
                            long degree_cap, size_t term_cap) {
  auto expanded = expand_to_poly(c, degree_cap, term_cap);
  if (expanded.size() != 1 || expanded[0].is_zero())
    throw std::domain_error("preprocess: circuit must be a nonzero single-output circuit");
  if (!compose(c, g, degree_cap, term_cap).is_zero())
    throw std::domain_error("preprocess: circuit is fooled by the generator");

  for (int i = 0; i <= D; ++i) {
    Circuit next = derivative_circuit(c, g.n, i + 1, D);
    if (!compose(next, g, degree_cap, term_cap).is_zero()) {
      return {derivative_circuit(c, g.n, i, D), i, g};
    }
  }
  // C(g_0,...,g_{n-1}, x_n) is independent of x_n: substitute a constant
  // that keeps the circuit nonzero and recurse on one fewer component.
  if (g.n == 0)
    throw std::domain_error("preprocess: degenerate single-component instance");
  for (int a = 0; a <= D; ++a) {
    Circuit fixed(g.n);
    int root = -1;
    {
      // copy with the last input substituted by the constant a, arity n
      std::vector<int> remap(c.size());
      for (size_t i = 0; i < c.size(); ++i) {
        const GateKind& gk = c.gates()[i];
        if (const auto* in = std::get_if<InputGate>(&gk)) {
          remap[i] = in->var == g.n ? fixed.add_const(Rat(a))
                                    : fixed.add_input(in->var);
        } else if (const auto* k = std::get_if<ConstGate>(&gk)) {
          remap[i] = fixed.add_const(k->value);
        } else if (const auto* ad = std::get_if<AddGate>(&gk)) {
          std::vector<WireIn> ws;
          for (const auto& w : ad->children)
            ws.push_back({w.weight, remap[w.gate]});
          remap[i] = fixed.add_add(std::move(ws));
        } else {
          const auto& m = std::get<MulGate>(gk);
          remap[i] = fixed.add_mul({m.lhs.weight, remap[m.lhs.gate]},
                                   {m.rhs.weight, remap[m.rhs.gate]});
        }
      }
      root = remap[c.outputs()[0]];
    }
    fixed.set_outputs({root});
    if (!expand_to_poly(fixed, degree_cap, term_cap)[0].is_zero())
      return preprocess(fixed, build_gen(g.source, g.n - 1), D, degree_cap,
                        term_cap);
  }
  throw std::logic_error(
      "preprocess: no substitution keeps the circuit nonzero");
}

std::vector<Rat> find_shift(const Circuit& cp, const GeneratorMap& g, int d,
                            int D, long degree_cap, size_t term_cap) {
  const int side = d * D + 1;
  for (int deg = 0; deg <= g.k * (side - 1); ++deg) {
    for (const ExpVec& e : exponents_of_degree(g.k, deg)) {
      bool in_range = true;
      for (int v : e) in_range = in_range && v < side;
      if (!in_range) continue;
      std::vector<Rat> a;
      a.reserve(g.k);
      for (int v : e) a.emplace_back(v);
      if (!psi(cp, shift_gen(g, a), degree_cap, term_cap).is_zero()) return a;
    }
  }
  throw std::logic_error("find_shift: grid exhausted, internal bug");
}

ReconstructionState base_case(const std::vector<SparsePoly>& advice, int n) {
  if (static_cast<int>(advice.size()) != n + 1)
    throw std::invalid_argument("base_case: expected n+1 advice components");
  ReconstructionState st;
  st.k = advice[0].nvars();
  st.n = n;
  st.max_degree = n;
  for (int ell = 0; ell <= n; ++ell) {
    const SparsePoly& comp = advice[ell];
    if (!comp.is_zero() && comp != homogeneous_part(comp, ell))
      throw std::invalid_argument(
          "base_case: advice component is not homogeneous of its degree");
    for (const ExpVec& e : exponents_up_to_degree(st.k, n)) {
      SparsePoly de = partial_derivative(comp, e);
      if (!de.is_zero()) st.partials[ell][e] = std::move(de);
    }
  }
  return st;
}

StepCheck inductive_step(ReconstructionState& state, const Circuit& cp, int j,
                         const InterpolatingSet& good_points,
                         const std::vector<Rat>& psi_values,
                         const RatMat& lambda_inv, long degree_cap,
                         size_t term_cap,
                         const SparsePoly* ground_truth_shifted) {
  const int k = state.k;
  const int n = state.n;
  const auto monomials = exponents_up_to_degree(k, n);
  const size_t M = monomials.size();
  if (good_points.points.size() != M || psi_values.size() != M)
    throw std::invalid_argument("inductive_step: point set size mismatch");
  StepCheck check;
  check.j = j;

  Circuit dcp = derivative_circuit(cp, n, 1,
                                   static_cast<int>(cp.max_syntactic_degree()));

  std::vector<SparsePoly> slices;  // Delta_n(P_{n+j})(z, a_t), per point
  slices.reserve(M);
  for (size_t t = 0; t < M; ++t) {
    const auto& a = good_points.points[t];
    if (psi_values[t] == 0)
      throw std::domain_error("inductive_step: stale point with Psi = 0");
    // Gamma_i = sum_{|e|=i} (a^e / e!) * d_{z^e} P_{<= n+j-1}
    std::vector<SparsePoly> gamma;
    gamma.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      SparsePoly gi(k);
      for (const ExpVec& e : exponents_of_degree(k, i)) {
        Rat w(1);
        for (int v = 0; v < k; ++v) {
          for (int r = 0; r < e[v]; ++r) w *= a[v];
          w /= Rat(factorial(e[v]));
        }
        if (w == 0) continue;
        SparsePoly acc(k);
        for (int ell = 0; ell <= n + j - 1; ++ell)
          acc = acc + state.partial(ell, e);
        gi = gi + acc * w;
      }
      gamma.push_back(std::move(gi));
    }

    // alpha = (d x_n Cp)(Gamma)(0) must reproduce Psi(a)
    std::vector<Rat> gamma_at_zero;
    for (const auto& gi : gamma) gamma_at_zero.push_back(gi.coeff(ExpVec(k, 0)));
    Rat alpha = dcp.eval(gamma_at_zero)[0];
    if (alpha != psi_values[t]) check.alpha_equals_psi = false;

    SparsePoly u = compose_circuit_with_polys(cp, gamma, degree_cap, term_cap,
                                              TruncateSpec{j + 1, -1})[0] *
                   (Rat(-1) / psi_values[t]);
    // the lemma makes the truncated value exactly the homogeneous degree-j
    // slice; anything else is an internal bug
    if (u != homogeneous_part(u, j) && !u.is_zero())
      throw std::logic_error("inductive_step: truncation mismatch");
    if (!truncate_mod_ideal(u * u, j + 1).is_zero())
      check.a_square_vanishes = false;

    if (ground_truth_shifted) {
      SparsePoly pnj = homogeneous_part(*ground_truth_shifted, n + j);
      SparsePoly expected = delta(pnj, n);  // 2k vars
      std::vector<const Rat*> subs(2 * k, nullptr);
      for (int v = 0; v < k; ++v) subs[k + v] = &a[v];
      SparsePoly expected_at_a =
          expected.substitute(subs);  // y := a, z symbolic
      std::vector<int> zvars;
      for (int v = 0; v < k; ++v) zvars.push_back(v);
      if (u - expected_at_a.project_vars(zvars) != SparsePoly(k))
        check.residual_zero = false;
    }
    slices.push_back(std::move(u));
  }

  // interpolate: coeff_{a^e}(Delta_n(P_{n+j})(z,a)) = e!^{-1} d_{z^e}P_{n+j}
  std::map<ExpVec, SparsePoly, GrlexLess> order_n;
  for (size_t m = 0; m < M; ++m) {
    SparsePoly cm(k);
    for (size_t t = 0; t < M; ++t)
      cm = cm + slices[t] * lambda_inv.at(m, t);
    if (total_degree(monomials[m]) < n) {
      if (!cm.is_zero())
        throw std::logic_error(
            "inductive_step: low-order interpolation coefficient nonzero");
      continue;
    }
    Rat efact(1);
    for (int v : monomials[m]) efact *= Rat(factorial(v));
    order_n[monomials[m]] = cm * efact;
  }

  auto all = euler_descend(order_n, n + j, n);
  for (auto& [e, de] : all)
    if (!de.is_zero()) state.partials[n + j][e] = std::move(de);
  state.max_degree = n + j;
  return check;
}

ReconstructionLedger size_ledger_report(int n, int k, const Int& s_prime,
                                        int d) {
  Int N = binomial(n + k, k);
  ReconstructionLedger l;
  l.base_size = N * N;
  Int n10;
  mpz_pow_ui(n10.get_mpz_t(), N.get_mpz_t(), 10);
  Int step = n10 + s_prime * N;
  l.per_step_increment = step + step * Int(d) * d;
  l.total = l.base_size + Int(std::max(d - n, 0)) * l.per_step_increment;
  return l;
}

ReconstructionResult reconstruct(const Circuit& c, const GeneratorMap& g,
                                 int D, long degree_cap, size_t term_cap,
                                 bool verify) {
  PreprocessResult pre = preprocess(c, g, D, degree_cap, term_cap);
  const GeneratorMap& g0 = pre.gen;
  const int n = g0.n;
  const int k = g0.k;
  const int d = std::max(g0.d, 0);

  ReconstructionResult result;
  result.derivative_order = pre.order;
  result.ledger =
      size_ledger_report(n, k, Int(static_cast<long>(pre.cp.size())), d);

  if (d <= n) {
    // every component is already in the advice
    SparsePoly p(k);
    for (int ell = 0; ell <= std::max(d, 0); ++ell)
      p = p + homogeneous_part(g0.source, ell);
    result.recovered = p;
    result.shift.assign(k, Rat(0));
    return result;
  }

  result.shift = find_shift(pre.cp, g0, d, D, degree_cap, term_cap);
  GeneratorMap gs = shift_gen(g0, result.shift);
  const SparsePoly& shifted = gs.source;

  std::vector<SparsePoly> advice;
  for (int ell = 0; ell <= n; ++ell)
    advice.push_back(homogeneous_part(shifted, ell));
  ReconstructionState state = base_case(advice, n);

  SparsePoly psi_poly = psi(pre.cp, gs, degree_cap, term_cap);
  InterpolatingSet good = interpolating_set_with_constraint(k, n, psi_poly);
  std::vector<Rat> psi_vals;
  for (const auto& a : good.points) psi_vals.push_back(psi_poly.eval(a));

  const auto monomials = exponents_up_to_degree(k, n);
  RatMat lambda(good.points.size(), monomials.size());
  for (size_t t = 0; t < good.points.size(); ++t) {
    for (size_t m = 0; m < monomials.size(); ++m) {
      Rat v(1);
      for (int vi = 0; vi < k; ++vi)
        for (int r = 0; r < monomials[m][vi]; ++r) v *= good.points[t][vi];
      lambda.at(t, m) = v;
    }
  }
  RatMat lambda_inv = inverse(lambda);

  for (int j = 1; j <= d - n; ++j) {
    StepCheck chk = inductive_step(state, pre.cp, j, good, psi_vals,
                                   lambda_inv, degree_cap, term_cap,
                                   verify ? &shifted : nullptr);
    result.steps.push_back(chk);
  }

  std::vector<Rat> neg;
  for (const Rat& v : result.shift) neg.push_back(-v);
  result.recovered = taylor_shift(state.assembled(), neg);
  return result;
}

}  // namespace algen
