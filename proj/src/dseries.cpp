// SPDX-License-Identifier: Apache-2.0
#include "dseries.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "primes.hpp"
#include "special.hpp"

namespace mdsmom::dseries {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<int64_t> prime_divisors(uint64_t n) {
  std::vector<int64_t> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(static_cast<int64_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<int64_t>(n));
  return out;
}

}  // namespace

cplx squarefree_L_closed(const std::optional<arith::FundamentalDiscriminant>& fd, cplx w,
                         uint64_t b) {
  const cplx L = fd ? special::L_value(*fd, w) : special::zeta(w);
  cplx out = L / special::zeta(2.0 * w);
  for (int64_t p : prime_divisors(b)) {
    const double chi_p = fd ? arith::chi(*fd, p) : 1.0;
    out /= 1.0 + chi_p * std::exp(-w * std::log(static_cast<double>(p)));
  }
  if (fd)
    for (int64_t p : prime_divisors(static_cast<uint64_t>(fd->conductor)))
      out /= 1.0 - std::exp(-2.0 * w * std::log(static_cast<double>(p)));
  return out;
}

cplx squarefree_L_truncated(const std::optional<arith::FundamentalDiscriminant>& fd, cplx w,
                            uint64_t b, int64_t X) {
  if (w.real() <= 1.0)
    throw std::domain_error("squarefree_L_truncated: Re w > 1 required for convergence");
  const auto sf = squarefree_table(X);
  cplx sum(0.0, 0.0), comp(0.0, 0.0);
  for (int64_t d = 1; d <= X; ++d) {
    if (!sf[d]) continue;
    if (std::gcd<uint64_t, uint64_t>(d, b) != 1) continue;
    const double chi_d = fd ? arith::chi(*fd, d) : 1.0;
    if (chi_d == 0.0) continue;
    const cplx term = chi_d * std::exp(-w * std::log(static_cast<double>(d)));
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Rat squarefree_L_residue(uint64_t b) {
  Rat r(1);
  for (int64_t p : prime_divisors(b)) r *= Rat(p, p + 1);
  r.canonicalize();
  return r;
}

cplx quad_mds_truncated(const std::vector<cplx>& s, cplx w, int64_t X, int sign,
                        int residue_class, bool conductor_weight) {
  cplx sum(0.0, 0.0), comp(0.0, 0.0);
  for (const auto& fd : arith::enumerate_fundamental(static_cast<double>(X))) {
    if (sign != 0 && fd.sign != sign) continue;
    if (residue_class != 0) {
      const int64_t mod = ((fd.d % 4) + 4) % 4;
      if (mod != residue_class) continue;
    }
    const double base =
        static_cast<double>(conductor_weight ? fd.conductor : std::abs(fd.d));
    cplx term = std::exp(-w * std::log(base));
    for (const cplx& si : s) term *= special::L_value(fd, si);
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ResidueCrossCheck residue_crosscheck(const std::vector<double>& s, int64_t Q, int64_t P) {
  const int m = static_cast<int>(s.size());
  if (m < 1 || m > 4) throw std::invalid_argument("residue_crosscheck: 1 <= m <= 4");
  for (double si : s)
    if (si < 1.05) throw std::invalid_argument("residue_crosscheck: Re s_i >= 1.05 required");

  // local factor pieces: T(p, a) = (1+1/p)^-1 sum_{e_1+...+e_m = 2a} p^-(e.s)
  auto composition_sum = [&](double p, int total) {
    // sum over e_1+...+e_m = total of p^-(e . s), by recursion over coordinates
    std::vector<double> cur(total + 1, 0.0), next(total + 1, 0.0);
    cur[0] = 1.0;  // zero coordinates assigned yet
    for (int coord = 0; coord < m; ++coord) {
      const double step = std::pow(p, -s[coord]);
      std::fill(next.begin(), next.end(), 0.0);
      for (int used = 0; used <= total; ++used) {
        if (cur[used] == 0.0) continue;
        double pw = cur[used];
        for (int e = 0; used + e <= total; ++e) {
          next[used + e] += pw;
          pw *= step;
        }
      }
      std::swap(cur, next);
    }
    return cur[total];
  };

  ResidueCrossCheck out;

  // ---- Euler-product route over primes <= P
  {
    const auto primes = primes_up_to(P);
    double log_sum = 0.0;
    for (int64_t pz : primes) {
      const double p = static_cast<double>(pz);
      double local = 0.0;
      for (int a = 1; a < 200; ++a) {
        const double t = composition_sum(p, 2 * a);
        local += t;
        if (t < 1e-18 * (1.0 + local)) break;
      }
      log_sum += std::log1p(local / (1.0 + 1.0 / p));
    }
    out.euler = 0.5 * std::exp(log_sum);
  }

  // ---- direct tuple sum accumulated by q = sqrt(n_1...n_m) <= Q, using the
  // multiplicativity of F(q) = sum_{tuple product = q^2} prod n_i^-s_i * u(q)
  {
    if (Q > (1 << 24)) throw std::invalid_argument("residue_crosscheck: Q too large");
    const auto spf = spf_table(static_cast<int32_t>(Q));
    std::vector<double> F(Q + 1, 0.0);
    F[1] = 1.0;
    double total = 1.0, comp = 0.0;
    for (int64_t q = 2; q <= Q; ++q) {
      const int64_t p = spf[q];
      int64_t rest = q;
      int a = 0;
      while (rest % p == 0) { rest /= p; ++a; }
      double local;
      {
        const double pd = static_cast<double>(p);
        local = composition_sum(pd, 2 * a) / (1.0 + 1.0 / pd);
      }
      F[q] = F[rest] * local;
      const double y = F[q] - comp;
      const double t = total + y;
      comp = (t - total) - y;
      total = t;
    }
    out.direct = 0.5 * total;
  }

  out.deviation = std::abs(out.direct - out.euler);
  return out;
}

SmallCaseResidue residue_smallcase(double s1, double s2, double T) {
  if (s1 <= 1.0 || s2 <= 1.0) throw std::invalid_argument("residue_smallcase: s1, s2 > 1");
  if (T < 100.0) throw std::invalid_argument("residue_smallcase: T >= 100");
  special::EvalPrecision prec;
  prec.abs_target = 1e-7;
  prec.em_order = 8;
  // (w-1) Z_T(w) at w = 1 + 1/log T, normalized by the exact finite-T pole
  // mass. The off-diagonal fluctuation decays only like 1/log T, so the
  // estimate combines two truncations and cancels it to first order.
  auto estimate_at = [&](double cutoff) {
    const cplx w(1.0 + 1.0 / std::log(cutoff), 0.0);
    auto f = [&](double t) {
      const cplx z1 = special::zeta(cplx(s1, t), prec);
      const cplx z2 = (s1 == s2) ? std::conj(z1) : special::zeta(cplx(s2, -t), prec);
      return z1 * z2 * std::exp(-w * std::log(t));
    };
    auto freq = [](double t) { return 0.5 * std::log(2.0 + t); };
    const auto q = special::integrate_panels(f, 1.0, cutoff, freq, 1e-5);
    const cplx pole_mass = (1.0 - std::exp((1.0 - w) * std::log(cutoff))) / (w - 1.0);
    return q.value / pole_mass;
  };
  const double la = std::log(T), lb = std::log(T / 3.0);
  const cplx ea = estimate_at(T);
  const cplx eb = estimate_at(T / 3.0);
  SmallCaseResidue out;
  out.estimate = (la * ea - lb * eb) / (la - lb);
  out.reference = special::zeta(cplx(s1 + s2, 0.0));
  out.rel_deviation = std::abs(out.estimate - out.reference) / std::abs(out.reference);
  return out;
}

SieveCheck sieve_identity(int64_t r, int64_t X,
                          const std::function<Rat(int64_t, int64_t)>& a) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("sieve_identity: r odd positive");
  {
    auto dec = arith::squarefree_decompose(static_cast<uint64_t>(r));
    if (dec.square_root_part != 1)
      throw std::invalid_argument("sieve_identity: r squarefree required");
  }
  SieveCheck out;
  out.lhs = 0;
  out.rhs = 0;
  const auto sf = squarefree_table(X);

  // divisors of r with Moebius signs
  std::vector<std::pair<int64_t, int>> divs;
  for (int64_t l = 1; l <= r; ++l)
    if (r % l == 0) divs.push_back({l, arith::mobius(static_cast<uint64_t>(l))});

  for (const auto& [l, mu] : divs) {
    if (mu == 0) continue;
    Rat inner(0);
    for (int64_t d1 = 1; d1 * d1 <= X; ++d1) {
      if (std::gcd(d1, 2 * l) != 1) continue;
      const int64_t dmax = X / (d1 * d1);
      for (int64_t d0 = 1; d0 <= dmax; ++d0) {
        if (!sf[d0] || d0 % 2 == 0) continue;
        inner += a(d0, d1);
      }
    }
    out.lhs += Rat(mu) * inner;
  }
  out.lhs.canonicalize();

  for (int64_t d1 = r; d1 * d1 <= X; d1 += r) {
    if (d1 % 2 == 0) continue;
    const int64_t dmax = X / (d1 * d1);
    for (int64_t d0 = 1; d0 <= dmax; ++d0) {
      if (!sf[d0] || d0 % 2 == 0) continue;
      out.rhs += a(d0, d1);
    }
  }
  out.rhs.canonicalize();
  out.exact_match = (out.lhs == out.rhs);
  return out;
}

double mellin_kernel(double x, double T) {
  if (x <= 0.0 || x == 1.0) throw std::invalid_argument("mellin_kernel: x > 0, x != 1");
  // w = 2 + iu; integrand decays like u^-2 and oscillates with frequency log x
  const double lx = std::log(x);
  auto f = [&](double u) {
    const cplx w(2.0, u);
    return std::exp(w * lx) / (w * (w + 1.0));
  };
  auto freq = [&](double) { return std::abs(lx); };
  const auto q = special::integrate_panels(f, -T, T, freq, 1e-6);
  return (q.value / (2.0 * kPi)).real();
}

ExponentSolution optimize_exponents() {
  // equalize 1-gamma = (1+t)/2 = (9/2)alpha; with a = 0 the feasibility
  // 3 - t - beta < 1, beta = alpha/gamma turns into 9t^2 - 29t + 16 < 0
  ExponentSolution sol;
  const double disc = std::sqrt(265.0);
  sol.theta0_threshold = (29.0 - disc) / 18.0;
  sol.theta = (47.0 - disc) / 36.0;
  sol.gamma = (1.0 - sol.theta0_threshold) / 2.0;
  sol.alpha = (1.0 + sol.theta0_threshold) / 9.0;
  sol.beta_lower = 2.0 - sol.theta0_threshold;  // = alpha/gamma at the threshold
  return sol;
}

ExponentSolution optimize_exponents_bisection(double scale) {
  if (scale <= 0.0) throw std::invalid_argument("optimize_exponents_bisection: scale > 0");
  // feasibility margin of the constraint beta > 2 - theta0 with beta = alpha/gamma
  auto margin = [&](double t) {
    const double gamma = (1.0 - t) / 2.0;
    const double alpha = (1.0 + t) / 9.0;
    const double beta = alpha / gamma;
    return scale * (beta - (2.0 - t));
  };
  double lo = 3.0 / 5.0, hi = 1.0 - 1e-12;
  if (margin(lo) > 0.0) throw std::domain_error("optimize_exponents_bisection: infeasible setup");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) <= 0.0 ? lo : hi) = mid;
  }
  ExponentSolution sol;
  sol.theta0_threshold = hi;
  // the common equalized exponent (1+t)/2 decreases as t decreases, so the
  // optimum sits at the feasibility threshold
  sol.theta = (1.0 + hi) / 2.0;
  sol.gamma = (1.0 - hi) / 2.0;
  sol.alpha = (1.0 + hi) / 9.0;
  sol.beta_lower = 2.0 - hi;
  return sol;
}

}  // namespace mdsmom::dseries
