#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lines {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline Rat inv(const Rat& a) {
  if (is_zero(a)) throw std::domain_error("division by zero in Q");
  return 1 / a;
}
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat scalar_of_int(long v, const Rat&) { return Rat(v); }

// Parses "num", "num/den", or "-num/den" into canonical form.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (sgn(r.get_den()) < 0) r = -r;  // keep denominators positive
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace lines
