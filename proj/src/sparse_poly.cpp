#include "algen/sparse_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace algen {

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
  SparsePoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("variable index out of range");
  SparsePoly p(nvars);
  ExpVec e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

SparsePoly SparsePoly::monomial(ExpVec e, const Rat& c) {
  SparsePoly p(static_cast<int>(e.size()));
  p.add_term(std::move(e), c);
  return p;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);  // grlex: last key is max degree
}

int SparsePoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int SparsePoly::individual_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_)
    for (int x : e) d = std::max(d, x);
  return d;
}

Rat SparsePoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const ExpVec& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_same_vars(const SparsePoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial variable-count mismatch");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
  SparsePoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int j = 0; j < e[i]; ++j) m *= point[i];
    }
    acc += m;
  }
  return acc;
}

SparsePoly SparsePoly::substitute(const std::vector<const Rat*>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("substitution arity mismatch");
  SparsePoly r(nvars_);
  ExpVec e2(nvars_);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i) {
      if (subs[i]) {
        e2[i] = 0;
        for (int j = 0; j < e[i]; ++j) m *= *subs[i];
      } else {
        e2[i] = e[i];
      }
    }
    if (m != 0) r.add_term(e2, m);
  }
  return r;
}

SparsePoly SparsePoly::project_vars(const std::vector<int>& keep) const {
  std::vector<bool> kept(nvars_, false);
  for (int v : keep) kept[v] = true;
  SparsePoly r(static_cast<int>(keep.size()));
  ExpVec e2(keep.size());
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i)
      if (!kept[i] && e[i] != 0)
        throw std::invalid_argument("project_vars: dropped variable occurs");
    for (size_t i = 0; i < keep.size(); ++i) e2[i] = e[keep[i]];
    r.add_term(e2, c);
  }
  return r;
}

SparsePoly partial_derivative(const SparsePoly& p, const ExpVec& e) {
  if (static_cast<int>(e.size()) != p.nvars())
    throw std::invalid_argument("derivative order vector length mismatch");
  SparsePoly r(p.nvars());
  ExpVec e2(p.nvars());
  for (const auto& [ex, c] : p.terms()) {
    Rat m = c;
    bool dead = false;
    for (int i = 0; i < p.nvars(); ++i) {
      if (ex[i] < e[i]) {
        dead = true;
        break;
      }
      for (int j = 0; j < e[i]; ++j) m *= (ex[i] - j);
      e2[i] = ex[i] - e[i];
    }
    if (!dead) r.add_term(e2, m);
  }
  return r;
}

SparsePoly homogeneous_part(const SparsePoly& p, int j) {
  SparsePoly r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) == j) r.add_term(e, c);
  return r;
}

SparsePoly truncate_mod_ideal(const SparsePoly& p, int m) {
  SparsePoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) >= m) break;  // grlex order: rest is higher degree
    r.add_term(e, c);
  }
  return r;
}

SparsePoly taylor_shift(const SparsePoly& p, const std::vector<Rat>& a) {
  const int k = p.nvars();
  if (static_cast<int>(a.size()) != k)
    throw std::invalid_argument("shift vector arity mismatch");
  // (z_i + a_i)^m expanded once per (variable, power) pair.
  std::vector<std::vector<SparsePoly>> pow(k);
  auto binom_pow = [&](int i, int m) -> const SparsePoly& {
    auto& cache = pow[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(k, Rat(1)));
    while (static_cast<int>(cache.size()) <= m) {
      SparsePoly base(k);
      ExpVec e(k, 0);
      e[i] = 1;
      base.add_term(e, Rat(1));
      base.add_term(ExpVec(k, 0), a[i]);
      cache.push_back(cache.back() * base);
    }
    return cache[m];
  };
  SparsePoly r(k);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(k, c);
    for (int i = 0; i < k; ++i)
      if (e[i] > 0) term = term * binom_pow(i, e[i]);
    r = r + term;
  }
  return r;
}

SparsePoly delta(const SparsePoly& p, int i) {
  if (i < 0) throw std::invalid_argument("delta: negative index");
  const int k = p.nvars();
  // Expand each monomial z^a of P(z+y) and keep the |b|=i slice of the
  // binomial products: z^a -> sum_{b<=a} prod C(a_j,b_j) z^{a-b} y^b.
  SparsePoly r(2 * k);
  for (const auto& [a, c] : p.terms()) {
    for (const ExpVec& b : exponents_of_degree(k, i)) {
      Rat coef = c;
      bool dead = false;
      ExpVec e(2 * k, 0);
      for (int j = 0; j < k; ++j) {
        if (b[j] > a[j]) {
          dead = true;
          break;
        }
        coef *= Rat(binomial(a[j], b[j]));
        e[j] = a[j] - b[j];
        e[k + j] = b[j];
      }
      if (!dead) r.add_term(e, coef);
    }
  }
  return r;
}

std::vector<ExpVec> exponents_of_degree(int k, int deg) {
  std::vector<ExpVec> out;
  ExpVec cur(k, 0);
  // Recursive enumeration in lex order; all share total degree, so this is
  // graded-lex within the slice.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == k - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (k == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

std::vector<ExpVec> exponents_up_to_degree(int k, int deg) {
  std::vector<ExpVec> out;
  for (int d = 0; d <= deg; ++d) {
    auto slice = exponents_of_degree(k, d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::map<ExpVec, SparsePoly, GrlexLess> euler_descend(
    const std::map<ExpVec, SparsePoly, GrlexLess>& order_n_partials, int t,
    int n) {
  if (t < n)
    throw std::domain_error("euler_descend: degree below derivative order");
  if (order_n_partials.empty())
    throw std::invalid_argument("euler_descend: empty input");
  const int k =
      static_cast<int>(order_n_partials.begin()->first.size());
  std::map<ExpVec, SparsePoly, GrlexLess> all = order_n_partials;
  for (int ord = n - 1; ord >= 0; --ord) {
    for (const ExpVec& e : exponents_of_degree(k, ord)) {
      SparsePoly acc(k);
      for (int i = 0; i < k; ++i) {
        ExpVec up = e;
        up[i] += 1;
        auto it = all.find(up);
        if (it == all.end())
          throw std::invalid_argument("euler_descend: missing partial");
        acc = acc + SparsePoly::variable(k, i) * it->second;
      }
      all[e] = acc * Rat(1, static_cast<unsigned long>(t - ord));
    }
  }
  return all;
}

SparsePoly kronecker_lift(const SparsePoly& p, int t, int b) {
  if (t < 1 || b < 2) throw std::invalid_argument("kronecker_lift: bad t or b");
  const int k = p.nvars();
  Int cap = 1;
  for (int j = 0; j < t; ++j) cap *= b;
  SparsePoly r(k * t);
  ExpVec e2(k * t, 0);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < k; ++i) {
      if (e[i] >= cap)
        throw std::domain_error("kronecker_lift: individual degree >= b^t");
      int rem = e[i];
      for (int j = 0; j < t; ++j) {
        e2[i * t + j] = rem % b;
        rem /= b;
      }
    }
    r.add_term(e2, c);
  }
  return r;
}

SparsePoly kronecker_project(const SparsePoly& q, int t, int b) {
  if (q.nvars() % t != 0)
    throw std::invalid_argument("kronecker_project: nvars not divisible by t");
  const int k = q.nvars() / t;
  SparsePoly r(k);
  ExpVec e2(k, 0);
  for (const auto& [e, c] : q.terms()) {
    for (int i = 0; i < k; ++i) {
      long acc = 0, w = 1;
      for (int j = 0; j < t; ++j) {
        acc += e[i * t + j] * w;
        w *= b;
      }
      e2[i] = static_cast<int>(acc);
    }
    r.add_term(e2, c);
  }
  return r;
}

std::string poly_to_text(const SparsePoly& p) {
  std::ostringstream os;
  os << "poly nvars=" << p.nvars() << "\n";
  for (const auto& [e, c] : p.terms()) {
    os << rat_str(c);
    for (int x : e) os << " " << x;
    os << "\n";
  }
  return os.str();
}

SparsePoly poly_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int nvars = -1;
  SparsePoly p;
  bool header = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header) {
      if (tok != "poly") throw std::invalid_argument("poly: missing header");
      std::string nv;
      if (!(ls >> nv) || nv.rfind("nvars=", 0) != 0)
        throw std::invalid_argument("poly: missing nvars");
      nvars = std::stoi(nv.substr(6));
      if (nvars < 0) throw std::invalid_argument("poly: negative nvars");
      p = SparsePoly(nvars);
      header = true;
      continue;
    }
    Rat c = parse_rat(tok);
    ExpVec e(nvars);
    for (int i = 0; i < nvars; ++i) {
      if (!(ls >> e[i]) || e[i] < 0)
        throw std::invalid_argument("poly: bad exponent line: " + line);
    }
    p.add_term(e, c);
  }
  if (!header) throw std::invalid_argument("poly: empty input");
  return p;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    os << rat_str(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        os << "*x" << i;
        if (e[i] > 1) os << "^" << e[i];
      }
    first = false;
  }
  return os;
}

}  // namespace algen
