#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace algen {

/// Exact rational scalar. Always kept canonical (gcd(num,den)=1, den>0).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Serializes canonically: integer values as "p", others as "p/q".
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// Bit length of |v|; pivoting heuristic for exact elimination.
inline size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace algen
