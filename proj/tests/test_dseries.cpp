// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "arith.hpp"
#include "dseries.hpp"
#include "special.hpp"

using namespace mdsmom;
using dseries::cplx;

TEST_CASE("squarefree L: trivial character is zeta(w)/zeta(2w)") {
  const cplx w(2.0, 0.0);
  const cplx closed = dseries::squarefree_L_closed(std::nullopt, w, 1);
  const cplx expect = special::zeta(w) / special::zeta(2.0 * w);
  CHECK(std::abs(closed - expect) < 1e-12);
  const cplx trunc = dseries::squarefree_L_truncated(std::nullopt, w, 1, 1000000);
  CHECK(std::abs(closed - trunc) < 1e-6);
}

TEST_CASE("squarefree L: closed vs truncated for a quadratic character") {
  const auto f5 = arith::FundamentalDiscriminant::from_d(5);
  const cplx w(2.0, 0.0);
  const cplx closed = dseries::squarefree_L_closed(f5, w, 6);
  const cplx trunc = dseries::squarefree_L_truncated(f5, w, 6, 1000000);
  CHECK(std::abs(closed - trunc) < 1e-6);
  CHECK_THROWS_AS(dseries::squarefree_L_truncated(f5, cplx(0.9, 0.0), 6, 1000),
                  std::domain_error);
}

TEST_CASE("squarefree L: random closed vs truncated agreement") {
  std::mt19937_64 rng(314);
  std::vector<arith::FundamentalDiscriminant> small;
  for (const auto& fd : arith::enumerate_fundamental(50))
    if (fd.conductor <= 50) small.push_back(fd);
  double worst = 0.0;
  for (int c = 0; c < 8; ++c) {
    const auto& fd = small[rng() % small.size()];
    const uint64_t b = 1 + rng() % 100;
    const cplx closed = dseries::squarefree_L_closed(fd, cplx(2.0, 0.0), b);
    const cplx trunc = dseries::squarefree_L_truncated(fd, cplx(2.0, 0.0), b, 1000000);
    worst = std::max(worst, std::abs(closed - trunc));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("squarefree L residue at w = 1") {
  CHECK(dseries::squarefree_L_residue(6) == Rat(1, 2));
  CHECK(dseries::squarefree_L_residue(1) == 1);
  CHECK(dseries::squarefree_L_residue(30) == Rat(2, 3) * Rat(3, 4) * Rat(5, 6));
}

TEST_CASE("truncated multiple Dirichlet series: reordered double sum oracle") {
  const cplx s(2.0, 0.0), w(2.0, 0.0);
  const int64_t X = 120;
  const cplx direct = dseries::quad_mds_truncated({s}, w, X);
  // swap the summation order: sum_n n^-2 sum_{|d|<=X} chi_d(n) |d|^-2
  const int64_t N = 300000;
  cplx swapped(0.0, 0.0);
  for (const auto& fd : arith::enumerate_fundamental(static_cast<double>(X))) {
    double inner = 0.0, comp = 0.0;
    for (int64_t n = N; n >= 1; --n) {
      const int c = arith::chi(fd, n);
      if (!c) continue;
      const double term = c / (static_cast<double>(n) * n);
      const double y = term - comp;
      const double t = inner + y;
      comp = (t - inner) - y;
      inner = t;
    }
    swapped += inner / (static_cast<double>(fd.d) * fd.d);
  }
  CHECK(std::abs(direct - swapped) < 1e-8);
}

TEST_CASE("sign/residue-class split recombines") {
  const cplx s(2.0, 0.0), w(2.0, 0.0);
  const int64_t X = 200;
  for (int sign : {+1, -1}) {
    const cplx z1 = dseries::quad_mds_truncated({s}, w, X, sign, 1);
    const cplx z2 = dseries::quad_mds_truncated({s}, w, X, sign, 2);
    const cplx z3 = dseries::quad_mds_truncated({s}, w, X, sign, 3);
    const cplx all = dseries::quad_mds_truncated({s}, w, X, sign, 0);
    CHECK(std::abs(all - (z1 + z2 + z3)) < 1e-12);
    // classes 2, 3 have conductor 4|d|, so the conductor-weighted series is
    // exactly class1 + 4^-w (class2 + class3)
    const cplx four_w = std::exp(-w * std::log(4.0));
    const cplx recombined = z1 + four_w * (z2 + z3);
    const cplx conductor = dseries::quad_mds_truncated({s}, w, X, sign, 0, true);
    CHECK(std::abs(conductor - recombined) < 1e-13);
  }
}

TEST_CASE("partial sums increase with X for positive-term specializations") {
  const cplx s(2.0, 0.0), w(2.0, 0.0);
  const double a = dseries::quad_mds_truncated({s}, w, 50, +1, 0).real();
  const double b = dseries::quad_mds_truncated({s}, w, 150, +1, 0).real();
  const double c = dseries::quad_mds_truncated({s}, w, 400, +1, 0).real();
  CHECK(a < b);
  CHECK(b < c);
}

TEST_CASE("residue cross-check m=1") {
  const auto c = dseries::residue_crosscheck({1.5}, 200000, 100000);
  CHECK(c.deviation < 1e-6);
  // reference: (1/2) prod_p [1 + (1+1/p)^-1 / (p^1.5 ... )] equals the direct route
  CHECK(c.direct == doctest::Approx(c.euler).epsilon(1e-6));
  // halving the tuple cutoff moves the direct route by more than the final deviation
  const auto half = dseries::residue_crosscheck({1.5}, 1000, 100000);
  CHECK(std::abs(half.direct - c.direct) > c.deviation);
}

TEST_CASE("residue cross-check converges monotonically in the cutoff ladder") {
  const std::vector<double> s = {1.3, 1.4};
  double prev = 1e9;
  for (int64_t Q : {2000L, 20000L, 200000L}) {
    const auto c = dseries::residue_crosscheck(s, Q, 200000);
    CHECK(c.deviation < prev + 1e-15);
    prev = c.deviation;
  }
}

TEST_CASE("small-case residue probe against zeta(s1+s2)") {
  const auto r = dseries::residue_smallcase(1.5, 1.5, 3000.0);
  CHECK(r.rel_deviation < 0.05);
  const auto r2 = dseries::residue_smallcase(2.0, 3.0, 3000.0);
  CHECK(r2.rel_deviation < 0.05);
}

TEST_CASE("diagonal reindexing identity") {
  // sum over l1 = l2 of l^-(s1+s2) is zeta(s1+s2) by definition
  double direct = 0.0;
  for (long l = 2000000; l >= 1; --l) direct += std::pow(static_cast<double>(l), -3.0);
  CHECK(direct == doctest::Approx(special::zeta(cplx(3.0, 0.0)).real()).epsilon(1e-6));
}

TEST_CASE("sieve identity exact for r in {1, 15, 105}") {
  auto toy = [](int64_t d0, int64_t d1) { return Rat(arith::kronecker(8, d0), d0 * d1); };
  for (int64_t r : {1L, 15L, 105L}) {
    const auto c = dseries::sieve_identity(r, 10000, toy);
    CHECK(c.exact_match);
  }
  CHECK_THROWS_AS(dseries::sieve_identity(4, 100, toy), std::invalid_argument);
  CHECK_THROWS_AS(dseries::sieve_identity(9, 100, toy), std::invalid_argument);
}

TEST_CASE("mellin kernel values") {
  CHECK(std::abs(dseries::mellin_kernel(4.0, 10000.0) - 0.75) < 1e-3);
  CHECK(std::abs(dseries::mellin_kernel(0.5, 10000.0)) < 1e-3);
  CHECK(std::abs(dseries::mellin_kernel(std::exp(1.0), 10000.0) - (1.0 - std::exp(-1.0))) < 1e-3);
}

TEST_CASE("exponent optimization") {
  const auto sol = dseries::optimize_exponents();
  CHECK(std::abs(sol.theta - 0.853366) < 1e-5);
  CHECK(std::abs(sol.theta0_threshold - (29.0 - std::sqrt(265.0)) / 18.0) < 1e-12);
  CHECK(std::abs(sol.theta - (47.0 - std::sqrt(265.0)) / 36.0) < 1e-12);
  // back-substitution: gamma = (1 - theta0)/2 and alpha = gamma * beta
  CHECK(std::abs(sol.gamma - (1.0 - sol.theta0_threshold) / 2.0) < 1e-12);
  CHECK(std::abs(sol.alpha - sol.gamma * sol.beta_lower) < 1e-12);

  const auto bis = dseries::optimize_exponents_bisection();
  CHECK(std::abs(bis.theta - sol.theta) < 1e-10);
  CHECK(std::abs(bis.theta0_threshold - sol.theta0_threshold) < 1e-10);
  // argmin invariance under common positive rescaling
  const auto scaled = dseries::optimize_exponents_bisection(137.0);
  CHECK(std::abs(scaled.theta - sol.theta) < 1e-10);
}
