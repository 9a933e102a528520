#include "algen/generator.hpp"

#include <stdexcept>

#include "algen/transforms.hpp"

namespace algen {

GeneratorMap build_gen(const SparsePoly& p, int n) {
  if (n < 0) throw std::invalid_argument("build_gen: n < 0");
  GeneratorMap g;
  g.k = p.nvars();
  g.n = n;
  g.d = p.degree();
  g.source = p;
  g.components.reserve(n + 1);
  for (int i = 0; i <= n; ++i) g.components.push_back(delta(p, i));
  return g;
}

std::vector<Rat> gen_eval(const GeneratorMap& g,
                          const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != 2 * g.k)
    throw std::invalid_argument("gen_eval: expected a point in Q^{2k}");
  std::vector<Rat> out;
  out.reserve(g.components.size());
  for (const auto& comp : g.components) out.push_back(comp.eval(point));
  return out;
}

GeneratorMap shift_gen(const GeneratorMap& g, const std::vector<Rat>& a) {
  return build_gen(taylor_shift(g.source, a), g.n);
}

SparsePoly compose(const Circuit& c, const GeneratorMap& g, long degree_cap,
                   size_t term_cap, std::optional<int> truncate_mod) {
  if (c.nvars() != g.n + 1)
    throw std::invalid_argument("compose: circuit arity != n+1");
  std::optional<TruncateSpec> spec;
  if (truncate_mod) spec = TruncateSpec{*truncate_mod, g.k};
  auto out =
      compose_circuit_with_polys(c, g.components, degree_cap, term_cap, spec);
  if (out.size() != 1)
    throw std::invalid_argument("compose: expected a single-output circuit");
  return out[0];
}

SparsePoly psi(const Circuit& cp, const GeneratorMap& g, long degree_cap,
               size_t term_cap) {
  if (cp.nvars() != g.n + 1)
    throw std::invalid_argument("psi: circuit arity != n+1");
  int dn = static_cast<int>(cp.max_syntactic_degree());
  Circuit dc = derivative_circuit(cp, g.n, 1, dn);
  SparsePoly composed = compose(dc, g, degree_cap, term_cap);
  // set the z block to zero, keep y symbolic
  Rat zero(0);
  std::vector<const Rat*> subs(2 * g.k, nullptr);
  for (int i = 0; i < g.k; ++i) subs[i] = &zero;
  SparsePoly at_zero = composed.substitute(subs);
  std::vector<int> y_vars;
  for (int i = 0; i < g.k; ++i) y_vars.push_back(g.k + i);
  return at_zero.project_vars(y_vars);
}

}  // namespace algen
