#include "algen/hitting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace algen {

std::vector<std::vector<Rat>> graded_grid(int k, int side, size_t cap) {
  if (side < 1) throw std::invalid_argument("graded_grid: side < 1");
  std::vector<std::vector<Rat>> pts;
  double total = 1;
  for (int i = 0; i < k; ++i) total *= side;
  if (total > static_cast<double>(cap))
    throw CapExceeded(CapExceeded::Terms, "grid enumeration cap exceeded");
  for (int deg = 0; deg <= k * (side - 1); ++deg) {
    for (const ExpVec& e : exponents_of_degree(k, deg)) {
      if (std::any_of(e.begin(), e.end(), [&](int v) { return v >= side; }))
        continue;
      std::vector<Rat> pt;
      pt.reserve(k);
      for (int v : e) pt.emplace_back(v);
      pts.push_back(std::move(pt));
    }
  }
  return pts;
}

HittingSet trivial_grid_hitting_set(int nvars, int d, const std::vector<Rat>& S,
                                    size_t enum_cap) {
  if (static_cast<int>(S.size()) <= d)
    throw std::invalid_argument("trivial grid: need |S| >= d+1");
  HittingSet h;
  h.provenance = "trivial-grid";
  h.params["nvars"] = std::to_string(nvars);
  h.params["individual_degree"] = std::to_string(d);
  h.params["side"] = std::to_string(S.size());
  auto idx = graded_grid(nvars, static_cast<int>(S.size()), enum_cap);
  h.points.reserve(idx.size());
  for (const auto& iv : idx) {
    std::vector<Rat> pt;
    pt.reserve(nvars);
    for (const Rat& i : iv) pt.push_back(S[i.get_num().get_ui()]);
    h.points.push_back(std::move(pt));
  }
  return h;
}

namespace {

// Incremental row-echelon store for the greedy rank check.
class RankTracker {
 public:
  // Reduces row against the accepted basis; keeps it if independent.
  bool try_add(std::vector<Rat> row) {
    for (const auto& [pivot, base] : rows_) {
      if (row[pivot] == 0) continue;
      Rat f = row[pivot];
      for (size_t c = 0; c < row.size(); ++c) row[c] -= f * base[c];
    }
    size_t pivot = row.size();
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot == row.size()) return false;
    Rat inv = Rat(1) / row[pivot];
    for (auto& v : row) v *= inv;
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }

 private:
  std::vector<std::pair<size_t, std::vector<Rat>>> rows_;
};

std::vector<Rat> monomial_row(const std::vector<Rat>& pt,
                              const std::vector<ExpVec>& monomials) {
  std::vector<Rat> row;
  row.reserve(monomials.size());
  for (const ExpVec& e : monomials) {
    Rat v(1);
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) v *= pt[i];
    row.push_back(std::move(v));
  }
  return row;
}

}  // namespace

InterpolatingSet interpolating_set_with_constraint(int k, int n,
                                                   const SparsePoly& Q) {
  if (Q.is_zero())
    throw std::invalid_argument("interpolating set: constraint Q is zero");
  if (Q.nvars() != k)
    throw std::invalid_argument("interpolating set: Q arity != k");
  const auto monomials = exponents_up_to_degree(k, n);
  const size_t M = monomials.size();
  const int side = std::max(Q.degree(), 0) + n + 1;

  InterpolatingSet set;
  set.k = k;
  set.degree = n;
  RankTracker tracker;
  for (int deg = 0; deg <= k * (side - 1) && set.points.size() < M; ++deg) {
    for (const ExpVec& e : exponents_of_degree(k, deg)) {
      if (std::any_of(e.begin(), e.end(), [&](int v) { return v >= side; }))
        continue;
      std::vector<Rat> pt;
      pt.reserve(k);
      for (int v : e) pt.emplace_back(v);
      if (Q.eval(pt) == 0) continue;
      if (!tracker.try_add(monomial_row(pt, monomials))) continue;
      set.points.push_back(std::move(pt));
      if (set.points.size() == M) break;
    }
  }
  if (set.points.size() != M)
    throw std::logic_error(
        "interpolating set search exhausted: contradicts the existence bound");
  return set;
}

Circuit circuit_from_poly(const SparsePoly& p) {
  Circuit c(p.nvars());
  std::vector<int> input(p.nvars(), -1);
  auto var_gate = [&](int v) {
    if (input[v] < 0) input[v] = c.add_input(v);
    return input[v];
  };
  std::vector<WireIn> terms;
  for (const auto& [e, coef] : p.terms()) {
    int prod = -1;
    for (int v = 0; v < p.nvars(); ++v) {
      for (int rep = 0; rep < e[v]; ++rep) {
        int g = var_gate(v);
        prod = prod < 0 ? g : c.add_mul({Rat(1), prod}, {Rat(1), g});
      }
    }
    if (prod < 0) prod = c.add_const(Rat(1));  // constant monomial
    terms.push_back({coef, prod});
  }
  if (terms.empty()) {
    c.set_outputs({c.add_const(Rat(0))});
  } else {
    c.set_outputs({c.add_add(std::move(terms))});
  }
  return c;
}

std::optional<Circuit> find_annihilator(const GeneratorMap& g, int D,
                                        long degree_cap, size_t term_cap) {
  if (D < 1) throw std::invalid_argument("find_annihilator: D < 1");
  const auto candidates = exponents_up_to_degree(g.n + 1, D);
  // composed value of each candidate monomial in the components
  std::vector<SparsePoly> composed;
  composed.reserve(candidates.size());
  std::map<ExpVec, size_t, GrlexLess> col_of;
  for (const ExpVec& e : candidates) {
    SparsePoly v = SparsePoly::constant(2 * g.k, Rat(1));
    for (int i = 0; i <= g.n; ++i)
      for (int rep = 0; rep < e[i]; ++rep) v = v * g.components[i];
    if (v.degree() > degree_cap || v.term_count() > term_cap)
      throw CapExceeded(CapExceeded::Terms, "annihilator search cap exceeded");
    for (const auto& [me, mc] : v.terms()) col_of.emplace(me, 0);
    composed.push_back(std::move(v));
  }
  size_t idx = 0;
  for (auto& [me, col] : col_of) col = idx++;

  // rows: monomials of the composed space; cols: candidate circuit monomials
  RatMat m(col_of.size(), candidates.size());
  for (size_t j = 0; j < composed.size(); ++j)
    for (const auto& [me, mc] : composed[j].terms())
      m.at(col_of.at(me), j) = mc;
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;

  SparsePoly cpoly(g.n + 1);
  for (size_t j = 0; j < candidates.size(); ++j)
    if (basis[0][j] != 0) cpoly.add_term(candidates[j], basis[0][j]);
  Circuit circ = circuit_from_poly(cpoly);
  // never trust the linear algebra: recheck the defining property
  if (!compose(circ, g, degree_cap, term_cap).is_zero())
    throw std::logic_error("annihilator recheck failed");
  return circ;
}

SparsePoly hard_poly_from_hitting_set(const HittingSet& h, int k, int d_ind) {
  Int monomial_count;
  mpz_ui_pow_ui(monomial_count.get_mpz_t(), d_ind + 1, k);
  if (monomial_count <= static_cast<long>(h.points.size()))
    throw std::invalid_argument(
        "hard_poly_from_hitting_set: need (d'+1)^k > |H|");
  if (h.points.empty()) return SparsePoly::constant(k, Rat(1));

  std::vector<ExpVec> monomials;
  for (const ExpVec& e : exponents_up_to_degree(k, k * d_ind))
    if (std::all_of(e.begin(), e.end(), [&](int v) { return v <= d_ind; }))
      monomials.push_back(e);

  RatMat m(h.points.size(), monomials.size());
  for (size_t r = 0; r < h.points.size(); ++r) {
    auto row = monomial_row(h.points[r], monomials);
    for (size_t c = 0; c < row.size(); ++c) m.at(r, c) = row[c];
  }
  auto basis = kernel_basis(m);
  if (basis.empty())
    throw std::logic_error("hard poly kernel empty despite dimension count");
  SparsePoly p(k);
  for (size_t j = 0; j < monomials.size(); ++j)
    if (basis[0][j] != 0) p.add_term(monomials[j], basis[0][j]);
  return p;
}

PitResult pit_deterministic(const Circuit& c, const HittingSet& h) {
  PitResult r;
  for (const auto& pt : h.points) {
    auto vals = c.eval(pt);
    if (std::any_of(vals.begin(), vals.end(),
                    [](const Rat& v) { return v != 0; })) {
      r.nonzero = true;
      r.witness = pt;
      return r;
    }
  }
  return r;
}

PitResult pit_random(const Circuit& c, long degree_bound, int trials,
                     uint64_t seed) {
  if (degree_bound < 1 || trials < 1)
    throw std::invalid_argument("pit_random: bad parameters");
  std::mt19937_64 rng(seed);
  const unsigned long side = 2 * degree_bound + 1;  // S = {0,...,2D}
  PitResult r;
  r.trials = trials;
  Rat per_trial(degree_bound, side);
  Rat bound(1);
  for (int i = 0; i < trials; ++i) bound *= per_trial;
  r.error_bound = rat_str(bound);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> pt;
    pt.reserve(c.nvars());
    for (int i = 0; i < c.nvars(); ++i)
      pt.emplace_back(static_cast<unsigned long>(rng() % side));
    auto vals = c.eval(pt);
    if (std::any_of(vals.begin(), vals.end(),
                    [](const Rat& v) { return v != 0; })) {
      r.nonzero = true;
      r.witness = pt;
      return r;
    }
  }
  return r;
}

DerandParams derand_params(unsigned long s, const Rat& delta, int k) {
  if (s < 2 || delta <= 0 || k < 1)
    throw std::invalid_argument("derand_params: need s >= 2, delta > 0, k >= 1");
  DerandParams p;
  // t = ceil(8 / delta)
  Int num = 8 * delta.get_den(), den = delta.get_num();
  Int t;
  mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (t < 1) t = 1;
  p.t = static_cast<int>(t.get_si());
  unsigned long expo =
      (10ul * p.t * k + 2) * static_cast<unsigned long>(p.t);
  Int s_pow;
  mpz_ui_pow_ui(s_pow.get_mpz_t(), s, expo);
  p.d = s_pow + 1;  // smallest d with d > s^{(10tk+2)t}
  Int root;
  int exact = mpz_root(root.get_mpz_t(), p.d.get_mpz_t(), p.t);
  if (!exact) root += 1;  // ceil(d^{1/t})
  p.d_prime = Int(k) * p.t * root;
  Int base = Int(s) * p.d_prime + 1;
  mpz_pow_ui(p.hitting_set_size.get_mpz_t(), base.get_mpz_t(),
             2ul * p.t * k);
  p.size_bits = bit_length(p.hitting_set_size);
  return p;
}

namespace {

// Smallest base b >= 2 with b^t > the max individual degree of p.
int kronecker_base(const SparsePoly& p, int t) {
  int idmax = std::max(p.individual_degree(), 0);
  int b = 2;
  while (true) {
    Int cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), b, t);
    if (cap > idmax) return b;
    ++b;
  }
}

}  // namespace

HittingSet derand_pipeline(const SparsePoly& p, long s, int t, int n,
                           size_t enum_cap) {
  if (s < 1 || t < 1 || n < 0)
    throw std::invalid_argument("derand_pipeline: bad parameters");
  SparsePoly q = t == 1 ? p : kronecker_lift(p, t, kronecker_base(p, t));
  GeneratorMap g = build_gen(q, n);
  const int side = static_cast<int>(s * std::max(q.degree(), 0) + 1);
  HittingSet h;
  h.provenance = "derand";
  h.params["s"] = std::to_string(s);
  h.params["t"] = std::to_string(t);
  h.params["n"] = std::to_string(n);
  h.params["grid_side"] = std::to_string(side);
  for (const auto& a : graded_grid(2 * q.nvars(), side, enum_cap))
    h.points.push_back(gen_eval(g, a));
  return h;
}

HittingSet bootstrap_pipeline(const HittingSet& h_small, int k, long s, int t,
                              int n, size_t enum_cap) {
  Int trivial;
  mpz_ui_pow_ui(trivial.get_mpz_t(), static_cast<unsigned long>(s + 1), k);
  if (trivial <= static_cast<long>(h_small.points.size()))
    throw std::invalid_argument("bootstrap: |H| must be < (s+1)^k");
  SparsePoly hard =
      hard_poly_from_hitting_set(h_small, k, static_cast<int>(s));
  HittingSet h = derand_pipeline(hard, s, t, n, enum_cap);
  h.provenance = "bootstrap";
  h.params["k"] = std::to_string(k);
  return h;
}

TauReport tau_pipeline(int d, long s, int t, size_t enum_cap) {
  if (d < 1 || s < 1 || t < 1)
    throw std::invalid_argument("tau_pipeline: bad parameters");
  TauReport rep;
  // P_d(x) = (x-1)(x-2)...(x-d)
  SparsePoly pd = SparsePoly::constant(1, Rat(1));
  for (int i = 1; i <= d; ++i) {
    SparsePoly lin(1);
    lin.add_term({1}, Rat(1));
    lin.add_term({0}, Rat(-i));
    pd = pd * lin;
  }
  rep.p_d = pd;
  rep.max_abs_coeff = 0;
  for (const auto& [e, c] : pd.terms()) {
    Int a = abs(c.get_num());
    if (a > rep.max_abs_coeff) rep.max_abs_coeff = a;
  }
  Int dd;
  mpz_ui_pow_ui(dd.get_mpz_t(), d, d);
  rep.coeff_bound = dd * factorial(d);

  SparsePoly q = t == 1 ? pd : kronecker_lift(pd, t, kronecker_base(pd, t));
  GeneratorMap g = build_gen(q, static_cast<int>(s) - 1);
  const int side = static_cast<int>(s * d + 1);  // a ranges over [sd+1]^{2t}
  rep.hset.provenance = "tau";
  rep.hset.params["d"] = std::to_string(d);
  rep.hset.params["s"] = std::to_string(s);
  rep.hset.params["t"] = std::to_string(t);
  rep.hset.params["grid_side"] = std::to_string(side);
  for (const auto& a : graded_grid(2 * q.nvars(), side, enum_cap))
    rep.hset.points.push_back(gen_eval(g, a));
  for (const auto& pt : rep.hset.points)
    for (const Rat& v : pt) {
      rep.max_coord_bits = std::max(rep.max_coord_bits,
                                    std::max(bit_length(v.get_num()),
                                             bit_length(v.get_den())));
    }
  return rep;
}

}  // namespace algen
