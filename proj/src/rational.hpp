// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace mdsmom {

// Exact arithmetic used by the group / residue machinery. GMP supplies the
// big-integer and reduced-fraction plumbing; everything built on top of it
// in this project is our own.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

// Primitive integer content of a rational vector: returns s > 0 such that
// v / s ... i.e. v = s * w with w an integer vector of content 1. The sign
// convention (first nonzero entry positive) is applied by the caller.
inline Rat primitive_scale(const std::vector<Rat>& v) {
  Int num_gcd = 0, den_lcm = 1;
  for (const Rat& x : v) {
    if (x == 0) continue;
    Int n = abs(x.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    Int d = x.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (num_gcd == 0) return Rat(1);
  Rat s(num_gcd, den_lcm);
  s.canonicalize();
  return s;
}

}  // namespace mdsmom
