// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace mdsmom::euler {

// Moment constant g_k from the unitary random-matrix prediction:
// k^2! * prod_{j=0}^{k-1} j!/(j+k)!  (an integer: 1, 2, 42, 24024, ...).
Rat g_zeta_int(unsigned k);

// Orbit-residue form prod_{l=0}^{m-1} l!/(l+m)!; satisfies
// g_zeta_int(m) = g_zeta_orbit(m) * (m^2)!.
Rat g_zeta_orbit(unsigned m);

// Quadratic-family factor prod_{l=1}^{m} l!/(2l)!.
Rat g_quad(unsigned m);

struct ProductValue {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on |log drift| of the remaining product
  int64_t prime_cutoff = 0;
};

// prod_{p<=P} (1-1/p)^(k^2) sum_j d_k(p^j)^2 p^-j      (zeta arithmetic factor)
ProductValue a_zeta(unsigned k, int64_t P);

// prod_{p<=P} (1-1/p)^M / (1+1/p) *
//   [ ((1-1/sqrt p)^-m + (1+1/sqrt p)^-m)/2 + 1/p ],  M = m(m+1)/2
ProductValue a_quad(unsigned m, int64_t P);

// prod_{p<=P} (1-1/p)^(m^2) sum_mu d_r(p^mu) d_{2m-r}(p^mu) p^-mu
ProductValue r_center_zeta(unsigned m, unsigned r, int64_t P);

// prod_{p<=P} (1-1/p)^M (1 + (1+1/p)^-1 sum_{mu>=1} d_m(p^{2mu}) p^-mu)
ProductValue r_center_quad(unsigned m, int64_t P);

enum class Family { zeta, quad_unweighted, quad_weighted };

// Conjectured leading moment coefficient:
//   zeta:            g_k a_k / (k^2)!
//   quad unweighted: (6/pi^2) a_m prod l!/(2l)!
//   quad weighted:   half the unweighted value
double leading_coeff(Family family, unsigned m_or_k, int64_t P = 1000000);

}  // namespace mdsmom::euler
