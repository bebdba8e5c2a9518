// SPDX-License-Identifier: Apache-2.0
#include "arith.hpp"

#include <cmath>
#include <stdexcept>

#include "primes.hpp"

namespace mdsmom::arith {

namespace {

// Jacobi symbol (a|n) for odd n > 0, any a.
int jacobi_odd(int64_t a, int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const int64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int64_t mod4(int64_t d) {
  int64_t r = d % 4;
  return r < 0 ? r + 4 : r;
}

}  // namespace

int kronecker(int64_t d, int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    if (d < 0) result = -result;
    n = -n;
  }
  // factor the 2-part of n
  while ((n & 1) == 0) {
    if ((d & 1) == 0) return 0;
    const int64_t r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
    n >>= 1;
  }
  if (n == 1) return result;
  return result * jacobi_odd(d, n);
}

FundamentalDiscriminant FundamentalDiscriminant::from_d(int64_t d) {
  if (d == 0 || d == 1)
    throw std::invalid_argument("FundamentalDiscriminant: d must be nonzero and != 1");
  const uint64_t ad = static_cast<uint64_t>(d > 0 ? d : -d);
  auto dec = squarefree_decompose(ad);
  if (dec.square_root_part != 1)
    throw std::invalid_argument("FundamentalDiscriminant: d must be squarefree");
  FundamentalDiscriminant fd;
  fd.d = d;
  fd.sign = d > 0 ? 1 : -1;
  fd.parity = d > 0 ? 0 : 1;
  fd.conductor = (mod4(d) == 1) ? static_cast<int64_t>(ad) : 4 * static_cast<int64_t>(ad);
  return fd;
}

int chi(const FundamentalDiscriminant& fd, int64_t n) {
  if (mod4(fd.d) == 1) return kronecker(fd.d, n);
  return kronecker(4 * fd.d, n);
}

std::vector<FundamentalDiscriminant> enumerate_fundamental(double x) {
  if (x < 2) throw std::invalid_argument("enumerate_fundamental: x >= 2 required");
  const int64_t bound = static_cast<int64_t>(std::floor(x));
  auto sf = squarefree_table(bound);
  std::vector<FundamentalDiscriminant> out;
  for (int64_t a = 1; a <= bound; ++a) {
    if (!sf[a]) continue;
    out.push_back(FundamentalDiscriminant::from_d(-a));
    if (a != 1) out.push_back(FundamentalDiscriminant::from_d(a));
  }
  return out;
}

std::vector<FundamentalDiscriminant> enumerate_by_conductor(double x) {
  if (x < 3) throw std::invalid_argument("enumerate_by_conductor: x >= 3 required");
  const int64_t bound = static_cast<int64_t>(std::floor(x));
  auto sf = squarefree_table(bound);
  std::vector<FundamentalDiscriminant> out;
  // conductor |d| for d = 1 (mod 4), 4|d| otherwise; walk conductors in order
  for (int64_t q = 3; q <= bound; ++q) {
    if (q % 4 == 0) {
      const int64_t a = q / 4;
      if (a <= bound && sf[a]) {
        if (mod4(a) != 1) out.push_back(FundamentalDiscriminant::from_d(a));
        if (mod4(-a) != 1) out.push_back(FundamentalDiscriminant::from_d(-a));
      }
    } else if (sf[q]) {
      if (mod4(q) == 1 && q != 1) out.push_back(FundamentalDiscriminant::from_d(q));
      if (mod4(-q) == 1) out.push_back(FundamentalDiscriminant::from_d(-q));
    }
  }
  return out;
}

uint64_t d_k(unsigned k, uint64_t n) {
  if (k == 0) return n == 1 ? 1 : 0;
  if (n == 0) throw std::invalid_argument("d_k: n >= 1 required");
  uint64_t result = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    uint64_t b = 1;
    for (unsigned i = 1; i <= k - 1; ++i) b = b * (e + i) / i;  // binom(e+k-1, k-1)
    result *= b;
  }
  if (n > 1) result *= k;
  return result;
}

SquarefreeDecomposition squarefree_decompose(uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose: n >= 1 required");
  SquarefreeDecomposition dec;
  dec.n = n;
  uint64_t n0 = 1, n1 = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (unsigned i = 0; i + 1 < e; i += 2) n1 *= p;
    if (e & 1) n0 *= p;
  }
  if (n > 1) n0 *= n;
  dec.squarefree_part = n0;
  dec.square_root_part = n1;
  return dec;
}

int mobius(uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n >= 1 required");
  int s = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    s = -s;
  }
  if (n > 1) s = -s;
  return s;
}

}  // namespace mdsmom::arith
