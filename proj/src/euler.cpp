// SPDX-License-Identifier: Apache-2.0
#include "euler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "arith.hpp"
#include "primes.hpp"

namespace mdsmom::euler {

namespace {

constexpr double kMuTol = 1e-18;  // local mu-series truncation: term < kMuTol * partial

double binom_double(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// d_k(p^j) as a double
double dk_prime_power(unsigned k, unsigned j) {
  if (k == 0) return j == 0 ? 1.0 : 0.0;
  return binom_double(j + k - 1, k - 1);
}

struct TailTracker {
  // keeps max |log factor| * p^2 over computed primes; the remaining product
  // drifts by at most that constant times sum_{n>P} n^-2 < 1/P
  double c = 0.0;
  void observe(double log_factor, double p) { c = std::max(c, std::abs(log_factor) * p * p); }
  double bound(double P) const { return c / P; }
};

ProductValue finish(double log_sum, const TailTracker& tail, int64_t P) {
  ProductValue out;
  out.value = std::exp(log_sum);
  out.tail_bound = std::abs(out.value) * tail.bound(static_cast<double>(P));
  out.prime_cutoff = P;
  return out;
}

}  // namespace

Rat g_zeta_int(unsigned k) {
  if (k < 1) throw std::invalid_argument("g_zeta_int: k >= 1");
  Rat g(factorial(k * k));
  for (unsigned j = 0; j + 1 <= k; ++j) {
    Rat f(factorial(j), factorial(j + k));
    f.canonicalize();
    g *= f;
  }
  return g;
}

Rat g_zeta_orbit(unsigned m) {
  if (m < 1) throw std::invalid_argument("g_zeta_orbit: m >= 1");
  Rat g(1);
  for (unsigned l = 0; l + 1 <= m; ++l) {
    Rat f(factorial(l), factorial(l + m));
    f.canonicalize();
    g *= f;
  }
  return g;
}

Rat g_quad(unsigned m) {
  if (m < 1) throw std::invalid_argument("g_quad: m >= 1");
  Rat g(1);
  for (unsigned l = 1; l <= m; ++l) {
    Rat f(factorial(l), factorial(2 * l));
    f.canonicalize();
    g *= f;
  }
  return g;
}

ProductValue a_zeta(unsigned k, int64_t P) {
  if (k < 1 || k > 8) throw std::invalid_argument("a_zeta: 1 <= k <= 8");
  if (P < 100) throw std::invalid_argument("a_zeta: P >= 100");
  const auto primes = primes_up_to(P);
  double log_sum = 0.0, comp = 0.0;
  TailTracker tail;
  for (int64_t p : primes) {
    const double ip = 1.0 / static_cast<double>(p);
    double s = 0.0, term = 1.0;
    for (unsigned j = 0; j < 400; ++j) {
      const double d = dk_prime_power(k, j);
      term = d * d * std::pow(ip, static_cast<double>(j));
      s += term;
      if (term < kMuTol * s) break;
    }
    const double lf = k * k * std::log1p(-ip) + std::log(s);
    tail.observe(lf, static_cast<double>(p));
    const double y = lf - comp;
    const double t = log_sum + y;
    comp = (t - log_sum) - y;
    log_sum = t;
  }
  return finish(log_sum, tail, P);
}

ProductValue a_quad(unsigned m, int64_t P) {
  if (m < 1 || m > 8) throw std::invalid_argument("a_quad: 1 <= m <= 8");
  if (P < 100) throw std::invalid_argument("a_quad: P >= 100");
  const unsigned M = m * (m + 1) / 2;
  const auto primes = primes_up_to(P);
  double log_sum = 0.0, comp = 0.0;
  TailTracker tail;
  for (int64_t p : primes) {
    const double ip = 1.0 / static_cast<double>(p);
    const double rs = 1.0 / std::sqrt(static_cast<double>(p));
    const double bracket =
        0.5 * (std::pow(1.0 - rs, -static_cast<double>(m)) + std::pow(1.0 + rs, -static_cast<double>(m))) + ip;
    const double lf = M * std::log1p(-ip) - std::log1p(ip) + std::log(bracket);
    tail.observe(lf, static_cast<double>(p));
    const double y = lf - comp;
    const double t = log_sum + y;
    comp = (t - log_sum) - y;
    log_sum = t;
  }
  return finish(log_sum, tail, P);
}

ProductValue r_center_zeta(unsigned m, unsigned r, int64_t P) {
  if (m < 1 || m > 8) throw std::invalid_argument("r_center_zeta: 1 <= m <= 8");
  if (r > 2 * m) throw std::invalid_argument("r_center_zeta: 0 <= r <= 2m");
  if (P < 100) throw std::invalid_argument("r_center_zeta: P >= 100");
  const auto primes = primes_up_to(P);
  double log_sum = 0.0, comp = 0.0;
  TailTracker tail;
  for (int64_t p : primes) {
    const double ip = 1.0 / static_cast<double>(p);
    double s = 0.0;
    for (unsigned mu = 0; mu < 400; ++mu) {
      const double term =
          dk_prime_power(r, mu) * dk_prime_power(2 * m - r, mu) * std::pow(ip, static_cast<double>(mu));
      s += term;
      if (term < kMuTol * s) break;
      if (r == 0 || r == 2 * m) break;  // only mu = 0 survives
    }
    const double lf = static_cast<double>(m) * m * std::log1p(-ip) + std::log(s);
    tail.observe(lf, static_cast<double>(p));
    const double y = lf - comp;
    const double t = log_sum + y;
    comp = (t - log_sum) - y;
    log_sum = t;
  }
  return finish(log_sum, tail, P);
}

ProductValue r_center_quad(unsigned m, int64_t P) {
  if (m < 1 || m > 8) throw std::invalid_argument("r_center_quad: 1 <= m <= 8");
  if (P < 100) throw std::invalid_argument("r_center_quad: P >= 100");
  const unsigned M = m * (m + 1) / 2;
  const auto primes = primes_up_to(P);
  double log_sum = 0.0, comp = 0.0;
  TailTracker tail;
  for (int64_t p : primes) {
    const double ip = 1.0 / static_cast<double>(p);
    double s = 0.0;
    for (unsigned mu = 1; mu < 400; ++mu) {
      const double term = dk_prime_power(m, 2 * mu) * std::pow(ip, static_cast<double>(mu));
      s += term;
      if (term < kMuTol * s) break;
    }
    const double lf = M * std::log1p(-ip) + std::log1p(s / (1.0 + ip));
    tail.observe(lf, static_cast<double>(p));
    const double y = lf - comp;
    const double t = log_sum + y;
    comp = (t - log_sum) - y;
    log_sum = t;
  }
  return finish(log_sum, tail, P);
}

double leading_coeff(Family family, unsigned m_or_k, int64_t P) {
  switch (family) {
    case Family::zeta: {
      const unsigned k = m_or_k;
      double g = to_double(g_zeta_int(k));
      double fact = 1.0;
      for (unsigned i = 2; i <= k * k; ++i) fact *= i;
      return g * a_zeta(k, P).value / fact;
    }
    case Family::quad_unweighted: {
      const unsigned m = m_or_k;
      const double six_over_pi2 = 6.0 / (3.141592653589793238462643 * 3.141592653589793238462643);
      return six_over_pi2 * a_quad(m, P).value * to_double(g_quad(m));
    }
    case Family::quad_weighted:
      return 0.5 * leading_coeff(Family::quad_unweighted, m_or_k, P);
  }
  throw std::invalid_argument("leading_coeff: unknown family");
}

}  // namespace mdsmom::euler
