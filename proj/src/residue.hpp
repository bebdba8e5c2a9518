// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mpoly.hpp"
#include "rational.hpp"

namespace mdsmom::residue {

enum class Family { quad, zeta };

// Orbit sum of H over the functional-equation group, with the block variables
// specialized along a line: eps_i = multipliers[i] * eps. Returned as an
// exact rational function in the two variables (eps, v).
//
//   quad:  H = 1 / (v prod_i eps_i prod_{i<j} (eps_i + eps_j)),
//          group of 2^m sign flips (v picks up the flipped eps_i).
//   zeta:  H = 1 / (v prod_{i<=m<j} (u_i + u_j)), summed over the subgroup of
//          balanced sign flips of u_1..u_2m (2^(2m-1) elements).
//
// multipliers must make every transformed denominator factor nonzero.
poly::FactoredFraction orbit_sum(Family family, int m, const std::vector<long>& multipliers);

std::vector<long> default_multipliers(Family family, int m);

// lim_{v->0} lim_{eps->0} v^(M+1) * orbit_sum, M = m(m+1)/2 (quad) or m^2
// (zeta), computed algebraically from the reduced fraction. Throws if the
// limit does not exist (which would indicate an implementation bug).
Rat kappa_quad(int m);
Rat kappa_quad(int m, const std::vector<long>& multipliers);
Rat kappa_zeta(int m);
Rat kappa_zeta(int m, const std::vector<long>& multipliers);

// Same limit for a homogeneous symmetric numerator f of degree > 0 (vanishes).
Rat kappa_limit_with_numerator(Family family, int m, const std::vector<long>& multipliers,
                               const poly::MPoly& f_full);

// Exact set check: the balanced subset sums of the standard specialization
// u_i = u_{m+i} = i, u_m = 0, u_2m = m equal {0, 1, ..., m^2} as a set.
bool set_identity_values(int m, std::vector<long>* values_out = nullptr);

struct DivisibilityReport {
  bool all_passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> checked;
};

// Forms N* = prefactor * (product of v-forms) * sum_g H_f(g(...)) exactly in
// the full multivariate ring and verifies the antisymmetry and the stated
// linear-factor divisibilities for a basis of symmetric homogeneous f of
// degree <= k_max.
DivisibilityReport divisibility_checks(Family family, int m, int k_max);

}  // namespace mdsmom::residue
