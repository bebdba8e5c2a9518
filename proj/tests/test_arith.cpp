// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "arith.hpp"

using namespace mdsmom;
using arith::FundamentalDiscriminant;

namespace {

// Euler-criterion oracle for odd primes p not dividing a.
int legendre_oracle(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  int64_t r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == p - 1 ? -1 : 0);
}

}  // namespace

TEST_CASE("kronecker basic values") {
  CHECK(arith::kronecker(3, 5) == -1);   // 3^2 mod 5 oracle
  CHECK(arith::kronecker(12, 5) == -1);  // quadratic-residue table mod 5
  CHECK(arith::kronecker(5, 1) == 1);
  CHECK(arith::kronecker(-7, 1) == 1);
  CHECK(arith::kronecker(2, 7) == 1);
  CHECK(arith::kronecker(2, 3) == -1);
  CHECK(arith::kronecker(-1, 0) == 1);
  CHECK(arith::kronecker(3, 0) == 0);
  CHECK(arith::kronecker(-3, -1) == -1);
}

TEST_CASE("kronecker vs Euler criterion on odd primes") {
  const int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 101, 997};
  std::mt19937_64 rng(42);
  for (int64_t p : primes)
    for (int i = 0; i < 50; ++i) {
      const int64_t a = static_cast<int64_t>(rng() % 2000) - 1000;
      CHECK(arith::kronecker(a, p) == legendre_oracle(a, p));
    }
}

TEST_CASE("kronecker completely multiplicative in n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const int64_t d = static_cast<int64_t>(rng() % 400) - 200;
    const int64_t m = 1 + static_cast<int64_t>(rng() % 300);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 300);
    CHECK(arith::kronecker(d, m * n) == arith::kronecker(d, m) * arith::kronecker(d, n));
  }
}

TEST_CASE("fundamental discriminant invariants") {
  const auto f5 = FundamentalDiscriminant::from_d(5);
  CHECK(f5.conductor == 5);
  CHECK(f5.parity == 0);
  const auto fm3 = FundamentalDiscriminant::from_d(-3);
  CHECK(fm3.conductor == 3);  // -3 = 1 (mod 4)
  CHECK(fm3.parity == 1);
  const auto f3 = FundamentalDiscriminant::from_d(3);
  CHECK(f3.conductor == 12);
  const auto fm1 = FundamentalDiscriminant::from_d(-1);
  CHECK(fm1.conductor == 4);
  CHECK_THROWS_AS(FundamentalDiscriminant::from_d(1), std::invalid_argument);
  CHECK_THROWS_AS(FundamentalDiscriminant::from_d(12), std::invalid_argument);
  CHECK_THROWS_AS(FundamentalDiscriminant::from_d(0), std::invalid_argument);
}

TEST_CASE("chi_d values and conventions") {
  const auto f5 = FundamentalDiscriminant::from_d(5);
  CHECK(arith::chi(f5, 2) == -1);
  const auto f3 = FundamentalDiscriminant::from_d(3);
  CHECK(arith::chi(f3, 5) == -1);  // (12/5)
  // chi_d(-1) = (-1)^a
  for (int64_t d : {5, -3, 3, -1, -2, 2, 7, -7, 10, -10}) {
    const auto fd = FundamentalDiscriminant::from_d(d);
    CHECK(arith::chi(fd, -1) == (fd.parity == 0 ? 1 : -1));
  }
  // zero on every multiple sharing a conductor prime
  const auto f6 = FundamentalDiscriminant::from_d(6);
  CHECK(arith::chi(f6, 6) == 0);
  CHECK(arith::chi(f6, 24 * 7) == 0);
}

TEST_CASE("chi_d multiplicative and periodic") {
  std::mt19937_64 rng(11);
  const auto fds = arith::enumerate_fundamental(60);
  for (int i = 0; i < 10000; ++i) {
    const auto& fd = fds[rng() % fds.size()];
    const int64_t m = 1 + static_cast<int64_t>(rng() % 500);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 500);
    CHECK(arith::chi(fd, m * n) == arith::chi(fd, m) * arith::chi(fd, n));
    CHECK(arith::chi(fd, n + fd.conductor) == arith::chi(fd, n));
  }
}

TEST_CASE("quadratic reciprocity for odd coprime parameters") {
  const auto fds = arith::enumerate_fundamental(120);
  for (const auto& fd : fds) {
    if (fd.d <= 0 || fd.d % 2 == 0) continue;
    for (int64_t n = 3; n <= 99; n += 2) {
      if (std::gcd(fd.d, n) != 1) continue;
      if (arith::squarefree_decompose(n).square_root_part != 1) continue;
      const int lhs = arith::kronecker(fd.d, n);
      const int sign = ((fd.d - 1) / 2 * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
      CHECK(lhs == arith::kronecker(n, fd.d) * sign);
    }
  }
}

TEST_CASE("nonprincipal character sums vanish over a period") {
  for (const auto& fd : arith::enumerate_fundamental(80)) {
    if (fd.conductor > 10000) continue;
    int64_t sum = 0;
    for (int64_t n = 1; n <= fd.conductor; ++n) sum += arith::chi(fd, n);
    CHECK(sum == 0);
  }
}

TEST_CASE("enumerate_fundamental matches a brute filter") {
  const auto list = arith::enumerate_fundamental(10);
  std::set<int64_t> got;
  for (const auto& fd : list) got.insert(fd.d);
  std::set<int64_t> want;
  for (int64_t d = -10; d <= 10; ++d) {
    if (d == 0 || d == 1) continue;
    if (arith::squarefree_decompose(static_cast<uint64_t>(std::abs(d))).square_root_part != 1)
      continue;
    want.insert(d);
  }
  CHECK(got == want);
  // sorted by |d|, negative first
  for (size_t i = 1; i < list.size(); ++i) {
    const int64_t a = std::abs(list[i - 1].d), b = std::abs(list[i].d);
    CHECK((a < b || (a == b && list[i - 1].d < list[i].d)));
  }
  // boundary case
  const auto tiny = arith::enumerate_fundamental(2);
  std::set<int64_t> tiny_got;
  for (const auto& fd : tiny) tiny_got.insert(fd.d);
  CHECK(tiny_got == std::set<int64_t>{-1, -2, 2});
}

TEST_CASE("both-sign density approaches 12/pi^2") {
  const double x = 1e6;
  const auto list = arith::enumerate_fundamental(x);
  const double density = static_cast<double>(list.size()) / x;
  CHECK(density == doctest::Approx(12.0 / (M_PI * M_PI)).epsilon(2e-3));
}

TEST_CASE("enumerate_by_conductor ordering and content") {
  const auto list = arith::enumerate_by_conductor(100);
  for (size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].conductor <= list[i].conductor);
  for (const auto& fd : list) CHECK(fd.conductor <= 100);
  // classical fundamental discriminants up to 100: check a few members
  std::set<int64_t> ds;
  for (const auto& fd : list) ds.insert(fd.d);
  CHECK(ds.count(-1) == 1);   // conductor 4
  CHECK(ds.count(-2) == 1);   // conductor 8
  CHECK(ds.count(5) == 1);
  CHECK(ds.count(24) == 0);   // not squarefree
  CHECK(ds.count(26) == 0);   // conductor 104 > 100
  CHECK(ds.count(-26) == 0);
}

TEST_CASE("d_k values") {
  CHECK(arith::d_k(3, 4) == 6);  // ordered triples with product 4
  CHECK(arith::d_k(7, 1) == 1);
  CHECK(arith::d_k(2, 12) == 6);
  // brute-force oracle for d_3
  for (uint64_t n = 1; n <= 60; ++n) {
    uint64_t count = 0;
    for (uint64_t a = 1; a <= n; ++a)
      for (uint64_t b = 1; a * b <= n; ++b)
        if (n % (a * b) == 0) ++count;
    CHECK(arith::d_k(3, n) == count);
  }
}

TEST_CASE("squarefree decomposition and moebius") {
  const auto d12 = arith::squarefree_decompose(12);
  CHECK(d12.squarefree_part == 3);
  CHECK(d12.square_root_part == 2);
  const auto d1 = arith::squarefree_decompose(1);
  CHECK(d1.squarefree_part == 1);
  CHECK(d1.square_root_part == 1);
  CHECK(arith::mobius(30) == -1);
  CHECK(arith::mobius(1) == 1);
  CHECK(arith::mobius(4) == 0);
  CHECK(arith::mobius(6) == 1);
  for (uint64_t n = 1; n <= 500; ++n) {
    const auto dec = arith::squarefree_decompose(n);
    CHECK(dec.squarefree_part * dec.square_root_part * dec.square_root_part == n);
    CHECK(arith::squarefree_decompose(dec.squarefree_part).square_root_part == 1);
  }
}
