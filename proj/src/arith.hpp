// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace mdsmom::arith {

// Full Kronecker symbol (d|n), extended to n <= 0 by the usual conventions:
// (d|0) = [|d| = 1], (d|-1) = sign(d) (with (0|-1) = 1), and (d|2) = 0 for
// even d, (-1)^((d^2-1)/8) for odd d.
int kronecker(int64_t d, int64_t n);

// Quadratic-field discriminant parameter d (squarefree, d != 1) together
// with the conductor and parity of the attached real primitive character.
struct FundamentalDiscriminant {
  int64_t d = 0;          // squarefree, != 0, != 1
  int64_t conductor = 0;  // |d| if d = 1 (mod 4), else 4|d|
  int sign = 0;           // +1 or -1
  int parity = 0;         // a with chi_d(-1) = (-1)^a; 0 iff d > 0

  static FundamentalDiscriminant from_d(int64_t d);
};

// chi_d(n) = (d|n) if d = 1 (mod 4), (4d|n) otherwise.
int chi(const FundamentalDiscriminant& fd, int64_t n);

// All discriminant parameters with |d| <= x, both signs, sorted by |d| with
// the negative one first. x >= 2 required.
std::vector<FundamentalDiscriminant> enumerate_fundamental(double x);

// Same family ordered/cut by conductor instead of |d|.
std::vector<FundamentalDiscriminant> enumerate_by_conductor(double x);

// Number of ordered factorizations of n into k positive integers.
// Multiplicative with d_k(p^e) = binom(e+k-1, k-1).
uint64_t d_k(unsigned k, uint64_t n);

struct SquarefreeDecomposition {
  uint64_t n = 1;
  uint64_t squarefree_part = 1;  // n0
  uint64_t square_root_part = 1; // n1, with n = n0 * n1^2
};

SquarefreeDecomposition squarefree_decompose(uint64_t n);

int mobius(uint64_t n);

}  // namespace mdsmom::arith
