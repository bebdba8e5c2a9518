// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <set>

#include "euler.hpp"
#include "mpoly.hpp"
#include "residue.hpp"

using namespace mdsmom;
using poly::LinearForm;
using poly::MPoly;

TEST_CASE("quad orbit sum m=1 is 1/(v(v+eps))") {
  const auto s = residue::orbit_sum(residue::Family::quad, 1, {1});
  CHECK(s.scale() == 1);
  CHECK(s.numerator().is_constant());
  CHECK(s.numerator().constant_value() == 1);
  REQUIRE(s.denominator().size() == 2);
  // forms are v and eps + v
  const LinearForm v{{Rat(0), Rat(1)}};
  const LinearForm ev{{Rat(1), Rat(1)}};
  CHECK(s.denominator().count(v) == 1);
  CHECK(s.denominator().count(ev) == 1);
}

TEST_CASE("zeta orbit sum m=1 matches the hand computation") {
  const auto s = residue::orbit_sum(residue::Family::zeta, 1, residue::default_multipliers(residue::Family::zeta, 1));
  CHECK(s.numerator().is_constant());
  CHECK(s.numerator().constant_value() * s.scale() == 1);
  CHECK(s.denominator().size() == 2);
}

TEST_CASE("quad m=2 denominator divides prod (v + l eps), M = 3") {
  const auto s = residue::orbit_sum(residue::Family::quad, 2, {1, 2});
  for (const auto& [f, mult] : s.denominator()) {
    CHECK(f.coeffs[1] == 1);           // v coefficient
    const Rat l = f.coeffs[0];         // eps coefficient in {0..3}
    CHECK(l >= 0);
    CHECK(l <= 3);
    CHECK(mult == 1);
  }
}

TEST_CASE("kappa values match the closed forms exactly") {
  for (int m = 1; m <= 3; ++m) {
    const Rat closed = Rat(1 << m) * euler::g_quad(m) * Rat(factorial(m * (m + 1) / 2));
    CHECK(residue::kappa_quad(m) == closed);
  }
  CHECK(residue::kappa_quad(1) == 1);
  CHECK(residue::kappa_quad(2) == 1);
  CHECK(residue::kappa_quad(3) == 2);
  CHECK(residue::kappa_zeta(1) == 1);
  CHECK(residue::kappa_zeta(2) == 2);
  for (int m = 1; m <= 2; ++m)
    CHECK(residue::kappa_zeta(m) == euler::g_zeta_orbit(m) * Rat(factorial(m * m)));
}

TEST_CASE("kappa is independent of the specialization") {
  std::mt19937_64 rng(123);
  for (int m = 1; m <= 3; ++m) {
    const Rat ref = residue::kappa_quad(m);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long> c;
      std::set<long> used;
      while (static_cast<int>(c.size()) < m) {
        const long v = 1 + static_cast<long>(rng() % 50);
        if (used.insert(v).second) c.push_back(v);
      }
      CHECK(residue::kappa_quad(m, c) == ref);
    }
  }
  for (int m = 1; m <= 2; ++m) {
    const Rat ref = residue::kappa_zeta(m);
    std::vector<long> c;
    for (int i = 0; i < 2 * m; ++i) c.push_back(1L << i);
    CHECK(residue::kappa_zeta(m, c) == ref);
    std::vector<long> c2 = {3, 1, 7, 2, 9, 5};
    c2.resize(2 * m);
    CHECK(residue::kappa_zeta(m, c2) == ref);
  }
}

TEST_CASE("orbit sum invariant under permuting the multipliers") {
  const auto a = residue::orbit_sum(residue::Family::quad, 2, {1, 2});
  const auto b = residue::orbit_sum(residue::Family::quad, 2, {2, 1});
  CHECK(a.scale() == b.scale());
  CHECK(a.numerator() == b.numerator());
  CHECK(a.denominator() == b.denominator());
  // zeta: permuting within each block (after relabeling) preserves the sum
  const auto za = residue::orbit_sum(residue::Family::zeta, 2, {1, 2, 4, 8});
  const auto zb = residue::orbit_sum(residue::Family::zeta, 2, {2, 1, 8, 4});
  CHECK(za.scale() == zb.scale());
  CHECK(za.numerator() == zb.numerator());
  CHECK(za.denominator() == zb.denominator());
}

TEST_CASE("degenerate specializations are rejected") {
  CHECK_THROWS_AS(residue::orbit_sum(residue::Family::quad, 2, {1, 1}), std::invalid_argument);
  // a repeated value within one block collapses a reflected pair factor
  CHECK_THROWS_AS(residue::orbit_sum(residue::Family::zeta, 2, {1, 1, 2, 3}),
                  std::invalid_argument);
  // repeats across blocks are fine under the paired reflections
  CHECK(residue::kappa_zeta(2, {1, 2, 1, 2}) == residue::kappa_zeta(2));
}

TEST_CASE("homogeneous numerators of positive degree contribute nothing") {
  for (int m = 1; m <= 2; ++m) {
    // f = (e_1 + ... + e_m)^k for k = 1, 2
    MPoly e1(m);
    for (int i = 0; i < m; ++i) e1 = e1 + MPoly::variable(m, i);
    const auto c = residue::default_multipliers(residue::Family::quad, m);
    CHECK(residue::kappa_limit_with_numerator(residue::Family::quad, m, c, e1) == 0);
    CHECK(residue::kappa_limit_with_numerator(residue::Family::quad, m, c, e1 * e1) == 0);
  }
  {
    const int m = 2;
    MPoly u1(2 * m);
    for (int i = 0; i < 2 * m; ++i) u1 = u1 + MPoly::variable(2 * m, i);
    const auto c = residue::default_multipliers(residue::Family::zeta, m);
    CHECK(residue::kappa_limit_with_numerator(residue::Family::zeta, m, c, u1) == 0);
  }
}

TEST_CASE("balanced subset sums give exactly 0..m^2") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<long> values;
    CHECK(residue::set_identity_values(m, &values));
    CHECK(static_cast<int>(values.size()) == m * m + 1);
    CHECK(values.front() == 0);
    CHECK(values.back() == static_cast<long>(m) * m);
  }
}

TEST_CASE("divisibility checks: quadratic family") {
  const auto r2 = residue::divisibility_checks(residue::Family::quad, 2, 3);
  CHECK(r2.all_passed);
  CHECK(!r2.checked.empty());
  const auto r3 = residue::divisibility_checks(residue::Family::quad, 3, 1);
  CHECK(r3.all_passed);
}

TEST_CASE("divisibility checks: zeta family") {
  const auto r = residue::divisibility_checks(residue::Family::zeta, 2, 1);
  CHECK(r.all_passed);
  CHECK(!r.checked.empty());
}
