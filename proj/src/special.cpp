// SPDX-License-Identifier: Apache-2.0
#include "special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mdsmom::special {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Bernoulli numbers B_2, B_4, ..., B_28.
const double kBernoulli[14] = {
    1.0 / 6,           -1.0 / 30,         1.0 / 42,           -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,     7.0 / 6,            -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,   854513.0 / 138,     -236364091.0 / 2730,
    8553103.0 / 6,     -23749461029.0 / 870};

cplx lgamma_core(cplx z) {
  // Lanczos, g = 7, valid for Re z > 0.
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool near_nonpositive_integer(cplx z, double tol) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

}  // namespace

cplx log_sin_complex(cplx z) {
  const double y = z.imag();
  if (std::abs(y) <= 18.0) return std::log(std::sin(z));
  const cplx i(0.0, 1.0);
  if (y > 0.0)
    return std::log(cplx(0.5)) + i * (kPi / 2.0) - i * z + std::log(1.0 - std::exp(2.0 * i * z));
  return std::log(cplx(0.5)) - i * (kPi / 2.0) + i * z + std::log(1.0 - std::exp(-2.0 * i * z));
}

cplx lgamma_complex(cplx z) {
  if (near_nonpositive_integer(z, 1e-13))
    throw std::domain_error("lgamma_complex: pole at nonpositive integer");
  if (z.real() >= 0.5) return lgamma_core(z);
  // reflection
  return std::log(cplx(kPi)) - log_sin_complex(kPi * z) - lgamma_core(1.0 - z);
}

namespace {

// Euler-Maclaurin core shared by zeta and hurwitz_zeta: sums (n+q)^(-s) for
// n = 0..N-1 plus the standard tail corrections at N+q.
cplx euler_maclaurin(cplx s, double q, const EvalPrecision& prec) {
  const int orders = std::clamp(prec.em_order / 2, 1, 13);
  const double target = std::max(prec.abs_target, 1e-16);
  int64_t n_terms = std::max<int64_t>(24, static_cast<int64_t>(std::ceil(std::abs(s.imag()) * 0.5)) + 24);

  for (;;) {
    const double big = static_cast<double>(n_terms) + q;
    // main sum, compensated
    cplx sum(0.0, 0.0), comp(0.0, 0.0);
    for (int64_t n = 0; n < n_terms; ++n) {
      const cplx term = std::exp(-s * std::log(static_cast<double>(n) + q));
      const cplx y = term - comp;
      const cplx t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    const cplx logb = std::log(big);
    sum += std::exp((1.0 - s) * logb) / (s - 1.0);
    sum += 0.5 * std::exp(-s * logb);

    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * big^(-s-2k+1)
    cplx poch = s;                      // rising factorial, 2k-1 factors
    double fact = 2.0;                  // (2k)!
    cplx power = std::exp((-s - 1.0) * logb);
    double last = 0.0;
    for (int k = 1; k <= orders; ++k) {
      const cplx term = kBernoulli[k - 1] / fact * poch * power;
      sum += term;
      last = std::abs(term);
      if (k < orders) {
        poch *= (s + cplx(2.0 * k - 1.0)) * (s + cplx(2.0 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        power /= big * big;
      }
    }
    // next-order magnitude as the error proxy
    const cplx next_poch = poch * (s + cplx(2.0 * orders - 1.0)) * (s + cplx(2.0 * orders));
    const double next_fact = fact * (2.0 * orders + 1.0) * (2.0 * orders + 2.0);
    const double err =
        std::abs(kBernoulli[std::min(orders, 13)] / next_fact * next_poch) * std::abs(power) / (big * big);
    if (err <= target || n_terms >= prec.max_terms) return sum;
    n_terms *= 2;
  }
}

}  // namespace

cplx zeta(cplx s, const EvalPrecision& prec) {
  if (std::abs(s - cplx(1.0)) < 1e-12) throw std::domain_error("zeta: pole at s = 1");
  if (std::abs(s.imag()) > 1e4 + 1.0) throw std::invalid_argument("zeta: |Im s| <= 1e4 supported");
  return euler_maclaurin(s, 1.0, prec);
}

cplx hurwitz_zeta(cplx s, double q, const EvalPrecision& prec) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("hurwitz_zeta: q in (0,1] required");
  if (std::abs(s - cplx(1.0)) < 1e-12) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  return euler_maclaurin(s, q, prec);
}

cplx chi_factor(cplx s) {
  // chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2)
  const cplx half_one_minus_s = 0.5 * (1.0 - s);
  const cplx half_s = 0.5 * s;
  if (near_nonpositive_integer(half_one_minus_s, 1e-12))
    throw std::domain_error("chi_factor: pole (gamma factor)");
  if (near_nonpositive_integer(half_s, 1e-14)) return cplx(0.0, 0.0);
  const cplx lg = (s - 0.5) * std::log(cplx(kPi)) + lgamma_complex(half_one_minus_s) -
                  lgamma_complex(half_s);
  return std::exp(lg);
}

cplx chi_factor_asymptotic(cplx s, double t) {
  if (t <= 0.0) throw std::invalid_argument("chi_factor_asymptotic: t > 0 required");
  const cplx i(0.0, 1.0);
  const double two_pi_over_t = 2.0 * kPi / t;
  return std::exp(i * (kPi / 4.0) + (s - 0.5) * std::log(two_pi_over_t) +
                  i * t * (std::log(2.0 * kPi / t) + 1.0));
}

// ---------------------------------------------------------------------------
// incomplete gamma

namespace {

template <typename S>
S gamma_q_series_p(S s, double x) {
  // series sum_k x^k / ((s+1)...(s+k)) for the regularized lower gamma
  S term = S(1.0);
  S sum = S(1.0);
  S denom = s;
  for (int k = 1; k < 600; ++k) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

template <typename S>
S gamma_q_cf(S s, double x) {
  // Lentz continued fraction for Gamma(s,x) * e^x * x^(-s)
  const double tiny = 1e-290;
  S b = S(x + 1.0) - s;
  S c = S(1.0 / tiny);
  S d = S(1.0) / b;
  S h = d;
  for (int k = 1; k < 600; ++k) {
    const S a = static_cast<double>(k) * (s - static_cast<double>(k));
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = S(tiny);
    c = b + a / c;
    if (std::abs(c) < tiny) c = S(tiny);
    d = S(1.0) / d;
    const S delta = d * c;
    h *= delta;
    if (std::abs(delta - S(1.0)) < 1e-16) break;
  }
  return h;
}

}  // namespace

cplx gamma_q(cplx s, double x) {
  if (x < 0.0) throw std::invalid_argument("gamma_q: x >= 0 required");
  if (x == 0.0) return cplx(1.0, 0.0);
  if (x < std::abs(s) + 1.5) {
    // P = x^s e^-x / Gamma(s+1) * series
    const cplx p = std::exp(s * std::log(x) - x - lgamma_complex(s + 1.0)) * gamma_q_series_p(s, x);
    return 1.0 - p;
  }
  return std::exp(-x + s * std::log(x) - lgamma_complex(s)) * gamma_q_cf(s, x);
}

double gamma_q_real(double s, double x) {
  if (x < 0.0) throw std::invalid_argument("gamma_q_real: x >= 0 required");
  if (x == 0.0) return 1.0;
  if (x < s + 1.5) {
    const double p = std::exp(s * std::log(x) - x - std::lgamma(s + 1.0)) * gamma_q_series_p(s, x);
    return 1.0 - p;
  }
  return std::exp(-x + s * std::log(x) - std::lgamma(s)) * gamma_q_cf(s, x);
}

// ---------------------------------------------------------------------------
// Dirichlet L-functions

cplx L_oracle(const arith::FundamentalDiscriminant& fd, cplx s) {
  const int64_t D = fd.conductor;
  if (D > 100000) throw std::invalid_argument("L_oracle: conductor too large (O(D) path)");
  if (std::abs(s - cplx(1.0)) < 1e-8)
    throw std::invalid_argument("L_oracle: s too close to 1 (cancelling Hurwitz poles)");
  EvalPrecision prec;
  prec.abs_target = 1e-14;
  cplx sum(0.0, 0.0), comp(0.0, 0.0);
  for (int64_t a = 1; a <= D; ++a) {
    const int c = arith::chi(fd, a);
    if (c == 0) continue;
    const cplx term = static_cast<double>(c) * hurwitz_zeta(s, static_cast<double>(a) / D, prec);
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return std::exp(-s * std::log(static_cast<double>(D))) * sum;
}

namespace {

// log of gamma(z) = pi^(-(z+a)/2) Gamma((z+a)/2) D^(z/2)
cplx log_gamma_factor(cplx z, int parity, double D) {
  return -0.5 * (z + static_cast<double>(parity)) * std::log(kPi) +
         lgamma_complex(0.5 * (z + static_cast<double>(parity))) + 0.5 * z * std::log(D);
}

}  // namespace

cplx L_fast(const arith::FundamentalDiscriminant& fd, cplx s) {
  const double D = static_cast<double>(fd.conductor);
  const double a = static_cast<double>(fd.parity);
  const int64_t N = static_cast<int64_t>(std::ceil(3.3 * std::sqrt(D))) + 8;
  const cplx ratio = std::exp(log_gamma_factor(1.0 - s, fd.parity, D) - log_gamma_factor(s, fd.parity, D));
  const cplx sa = 0.5 * (s + a);
  const cplx sb = 0.5 * (1.0 - s + a);
  cplx sum(0.0, 0.0), comp(0.0, 0.0);
  for (int64_t n = 1; n <= N; ++n) {
    const int c = arith::chi(fd, n);
    if (c == 0) continue;
    const double x = kPi * static_cast<double>(n) * static_cast<double>(n) / D;
    const cplx logn = std::log(static_cast<double>(n));
    const cplx term = static_cast<double>(c) * (std::exp(-s * logn) * gamma_q(sa, x) +
                                                ratio * std::exp((s - 1.0) * logn) * gamma_q(sb, x));
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double L_central(const arith::FundamentalDiscriminant& fd) {
  const double D = static_cast<double>(fd.conductor);
  const double s0 = fd.parity ? 0.75 : 0.25;
  const int64_t N = static_cast<int64_t>(std::ceil(3.3 * std::sqrt(D))) + 8;
  double sum = 0.0, comp = 0.0;
  for (int64_t n = 1; n <= N; ++n) {
    const int c = arith::chi(fd, n);
    if (c == 0) continue;
    const double x = kPi * static_cast<double>(n) * static_cast<double>(n) / D;
    const double term = c * gamma_q_real(s0, x) / std::sqrt(static_cast<double>(n));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return 2.0 * sum;
}

cplx L_value(const arith::FundamentalDiscriminant& fd, cplx s) {
  if (std::abs(s.real() - 0.5) < 1e-9) return L_fast(fd, s);
  return L_oracle(fd, s);
}

cplx completed_lambda(const arith::FundamentalDiscriminant& fd, cplx s) {
  const cplx half = 0.5 * (s + static_cast<double>(fd.parity));
  if (near_nonpositive_integer(half, 1e-12))
    throw std::domain_error("completed_lambda: gamma-factor pole");
  return std::exp(-half * std::log(kPi) + lgamma_complex(half)) * L_value(fd, s);
}

// ---------------------------------------------------------------------------
// quadrature

Quadrature integrate_panels(const std::function<cplx(double)>& f, double a, double b,
                            const std::function<double(double)>& frequency, double abs_tol) {
  Quadrature out;
  if (!(b > a)) return out;
  cplx total(0.0, 0.0), comp(0.0, 0.0);
  double err_total = 0.0;
  double t = a;
  while (t < b) {
    const double freq = std::max(std::abs(frequency(t)), 1e-3);
    double h = std::min({2.0 / freq, std::max(0.75 * std::abs(t), 0.5), b - t});
    const double budget = std::max(abs_tol * (h / (b - a)), 1e-18);
    // composite Simpson on the panel, doubled until stable
    int n = 8;
    cplx prev(0.0, 0.0);
    cplx cur(0.0, 0.0);
    double perr = 0.0;
    for (int pass = 0; pass < 12; ++pass) {
      cplx s1 = f(t) + f(t + h);
      cplx s4(0.0, 0.0), s2(0.0, 0.0);
      const double step = h / n;
      for (int i = 1; i < n; i += 2) s4 += f(t + i * step);
      for (int i = 2; i < n; i += 2) s2 += f(t + i * step);
      cur = (s1 + 4.0 * s4 + 2.0 * s2) * (step / 3.0);
      if (pass > 0) {
        perr = std::abs(cur - prev) / 15.0;
        if (perr <= budget || perr <= 1e-16 * std::abs(cur)) break;
      }
      prev = cur;
      n *= 2;
    }
    const cplx y = cur - comp;
    const cplx tt = total + y;
    comp = (tt - total) - y;
    total = tt;
    err_total += perr;
    t += h;
  }
  out.value = total;
  out.error = err_total;
  return out;
}

Quadrature oscillatory_integral(double B, double k, cplx w, double t_max) {
  if (B <= 0.0) throw std::invalid_argument("oscillatory_integral: B > 0 required");
  if (w.real() <= 0.0) throw std::domain_error("oscillatory_integral: nonconvergent for Re w <= 0");
  const double logB = std::log(B);
  const double c = std::log(2.0 * kPi) + 1.0;  // log(2 pi e)
  const cplx i(0.0, 1.0);
  auto phase_derivative = [&](double t) { return logB + k * (std::log(2.0 * kPi) - std::log(t)); };
  auto f = [&](double t) {
    return std::exp(i * (t * logB + k * t * (c - std::log(t))) - w * std::log(t));
  };

  Quadrature q = integrate_panels(f, 1.0, t_max, phase_derivative, 1e-10);

  const double sigma = w.real();
  if (B == 1.0 && k == 0.0) {
    // exact tail
    q.value += std::exp((1.0 - w) * std::log(t_max)) / (w - 1.0);
    return q;
  }
  // two integration-by-parts boundary corrections at t_max, remainder estimated
  const double phi1 = phase_derivative(t_max);
  if (std::abs(phi1) < 1e-6) {
    q.error += 2.0 * std::pow(t_max, -sigma) / sigma;  // stationary point at the cut: crude bound
    return q;
  }
  const cplx g0 = std::exp(-w * std::log(t_max));          // t^-w at t_max
  const cplx e0 = f(t_max);                                // e^{i phi} t^-w at t_max
  // d/dt of [t^-w / (i phi')] at t_max
  const double phi2 = -k / t_max;                          // phi''
  const cplx inv_iphi = 1.0 / (i * phi1);
  const cplx term1 = -e0 * inv_iphi;
  const cplx gprime = (-w / t_max) * g0;
  const cplx h1 = (gprime - g0 * (phi2 / phi1)) * inv_iphi;     // (g/(i phi'))' / e^{i phi} at t_max
  const cplx term2 = (h1 / (i * phi1)) * std::exp(i * (t_max * logB + k * t_max * (c - std::log(t_max))));
  q.value += term1 + term2;
  const double remainder = std::pow(t_max, -sigma) *
                           (std::abs(w) * (std::abs(w) + 1.0) / (sigma * phi1 * phi1) +
                            2.0 * std::abs(k) / (std::abs(phi1 * phi1 * phi1) * t_max)) /
                           std::abs(phi1);
  q.error += remainder;
  return q;
}

}  // namespace mdsmom::special
