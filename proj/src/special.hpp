// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "arith.hpp"

namespace mdsmom::special {

using cplx = std::complex<double>;

struct EvalPrecision {
  double abs_target = 1e-13;   // >= 1e-14
  int em_order = 12;           // even, 2..12 (number of Bernoulli corrections = em_order/2)
  int64_t max_terms = 1 << 22;
};

// log Gamma(z), principal-ish branch (only ever consumed through exp()).
cplx lgamma_complex(cplx z);

// log sin(z), stable for large |Im z|.
cplx log_sin_complex(cplx z);

// Riemann zeta by Euler-Maclaurin. Signals std::domain_error at the pole.
cplx zeta(cplx s, const EvalPrecision& prec = {});

// Hurwitz zeta(s, q) for 0 < q <= 1.
cplx hurwitz_zeta(cplx s, double q, const EvalPrecision& prec = {});

// chi(s) from zeta(s) = chi(s) zeta(1-s), in the symmetric gamma form.
cplx chi_factor(cplx s);

// Leading large-t approximation e^{i pi/4} (2pi/t)^(s-1/2) (2pi e/t)^(it).
cplx chi_factor_asymptotic(cplx s, double t);

// Regularized upper incomplete gamma Q(s, x) = Gamma(s,x)/Gamma(s), x >= 0.
cplx gamma_q(cplx s, double x);
double gamma_q_real(double s, double x);

// L(s, chi_d) via Hurwitz zeta over residue classes; O(conductor) work.
// Conductor limited to 1e5.
cplx L_oracle(const arith::FundamentalDiscriminant& fd, cplx s);

// Smoothed approximate-functional-equation evaluation, O(sqrt(D)) terms with
// incomplete-gamma weights. Intended for points on/near the critical line
// with moderate |Im s|.
cplx L_fast(const arith::FundamentalDiscriminant& fd, cplx s);

// Real central value L(1/2, chi_d), fast path used by the moment sweeps.
double L_central(const arith::FundamentalDiscriminant& fd);

// Dispatcher: L_fast on the critical line, L_oracle elsewhere.
cplx L_value(const arith::FundamentalDiscriminant& fd, cplx s);

// Completed Lambda(s) = pi^(-(s+a)/2) Gamma((s+a)/2) L(s, chi_d).
cplx completed_lambda(const arith::FundamentalDiscriminant& fd, cplx s);

struct Quadrature {
  cplx value{0.0, 0.0};
  double error = 0.0;
};

// int_1^Tmax B^(it) (2 pi e / t)^(k i t) t^(-w) dt plus an
// integration-by-parts tail correction beyond Tmax. Requires Re w > 0.
Quadrature oscillatory_integral(double B, double k, cplx w, double t_max);

// Composite adaptive panel integration of a complex-valued integrand over
// [a, b]; `frequency` estimates the local phase derivative (rad per unit t)
// so panel sizes track the oscillation.
Quadrature integrate_panels(const std::function<cplx(double)>& f, double a, double b,
                            const std::function<double(double)>& frequency, double abs_tol);

}  // namespace mdsmom::special
