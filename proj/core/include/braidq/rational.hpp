#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace braidq {

/// Exact arbitrary-precision rational scalar. All ring arithmetic in this
/// library is built on top of it; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_odd_integer(const Rat& r) {
  return is_integer(r) && mpz_odd_p(r.get_num().get_mpz_t());
}

/// binom(n, k) for non-negative integer arguments, 0 when k > n.
inline Int binom_uint(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

}  // namespace braidq
