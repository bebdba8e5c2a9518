// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arith.hpp"
#include "rational.hpp"

namespace mdsmom::dseries {

using cplx = std::complex<double>;

// ----- squarefree-restricted L series over positive d -------------------

// L_b(w, chi) = sum_{d > 0 squarefree, (d,b)=1} chi(d) d^-w via the closed
// form L(w,chi)/zeta(2w) * prod_{p|b}(1+chi(p)p^-w)^-1 * prod_{p|n}(1-p^-2w)^-1.
// `fd` empty means the trivial character (conductor 1).
cplx squarefree_L_closed(const std::optional<arith::FundamentalDiscriminant>& fd, cplx w,
                         uint64_t b);

// Direct truncated sum over squarefree d <= X coprime to b; Re w > 1.
cplx squarefree_L_truncated(const std::optional<arith::FundamentalDiscriminant>& fd, cplx w,
                            uint64_t b, int64_t X);

// Residue at w = 1 of zeta(2w) L_b(w, trivial): prod_{p|b} (1 + 1/p)^-1, exact.
Rat squarefree_L_residue(uint64_t b);

// ----- truncated multiple Dirichlet series -------------------------------

// Partial sum over discriminant parameters |d| <= X of prod_i L(s_i, chi_d) / |d|^w.
// sign: +1, -1 or 0 for both; residue_class: 1, 2, 3 (mod 4) or 0 for all.
// conductor_weight replaces |d|^-w by D^-w, which makes the class splitting
// recombine with the 4^-w factor: full = class1 + 4^-w (class2 + class3).
cplx quad_mds_truncated(const std::vector<cplx>& s, cplx w, int64_t X, int sign = 0,
                        int residue_class = 0, bool conductor_weight = false);

// ----- residue cross-check ------------------------------------------------

struct ResidueCrossCheck {
  double direct = 0.0;      // tuple sum over square products q^2, q <= Q
  double euler = 0.0;       // Euler-product route, primes <= P
  double deviation = 0.0;
};

// Residue at w = 1 of zeta(2w) Z^+(s, w): computed both as the direct sum
// (1/2) sum_{n_1...n_m square} prod_{p|n...}(1+1/p)^-1 / prod n_i^{s_i}
// accumulated over q = sqrt(product) <= Q, and as the Euler product
// (1/2) prod_{p<=P} [1 + (1+1/p)^-1 sum_{mu>=1} sum_{e:|e|=2mu} p^-(e.s)].
ResidueCrossCheck residue_crosscheck(const std::vector<double>& s, int64_t Q, int64_t P);

// ----- small-case residue for the t-integral family ----------------------

struct SmallCaseResidue {
  cplx estimate;   // normalized (w-1) * Z(s1,s2,w) at w = 1 + 1/log T
  cplx reference;  // zeta(s1+s2)
  double rel_deviation = 0.0;
};

// Residue probe of int_1^T zeta(s1+it) zeta(s2-it) t^-w dt at its w = 1 pole
// against zeta(s1+s2); slow logarithmic convergence in T.
SmallCaseResidue residue_smallcase(double s1, double s2, double T);

// ----- Moebius sieve identity ----------------------------------------------

struct SieveCheck {
  bool exact_match = false;
  Rat lhs;  // sum_{l | r} mu(l) [sum over d = d0 d1^2 <= X, (d0,2)=1, (d1,2l)=1]
  Rat rhs;  // sum over d <= X with (d0 d1, 2) = 1 and d1 = 0 mod r
};

// Verifies the inclusion-exclusion over l | r exactly in rational arithmetic
// for a caller-supplied coefficient family a(d0, d1).
SieveCheck sieve_identity(int64_t r, int64_t X,
                          const std::function<Rat(int64_t, int64_t)>& a);

// ----- Mellin kernel --------------------------------------------------------

// (1/2 pi i) int_{2-iT}^{2+iT} x^w / (w (w+1)) dw, which converges to
// (1 - 1/x) for x > 1 and 0 for 0 < x < 1.
double mellin_kernel(double x, double T);

// ----- error-exponent optimization -----------------------------------------

struct ExponentSolution {
  double gamma = 0.0;
  double alpha = 0.0;
  double beta_lower = 0.0;      // infimum of admissible beta at the optimum
  double theta0_threshold = 0.0;
  double theta = 0.0;
};

// Closed-form equalization of the four unweighted-moment error terms with
// a = alpha - gamma*beta = 0, feasibility beta > 8/9 and 3 - theta0 - beta < 1.
ExponentSolution optimize_exponents();

// Same threshold and exponent by bisection on the feasibility boundary;
// `scale` multiplies all four exponent expressions (the argmin is invariant).
ExponentSolution optimize_exponents_bisection(double scale = 1.0);

}  // namespace mdsmom::dseries
