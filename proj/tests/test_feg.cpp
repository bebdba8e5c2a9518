// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <set>

#include "affine.hpp"
#include "rational.hpp"
#include "regions.hpp"

using namespace mdsmom;
using feg::AffineMap;
using feg::GroupElement;

TEST_CASE("reflection generators are involutions") {
  for (int m = 1; m <= 4; ++m) {
    for (int j = 1; j <= 2 * m; ++j) {
      const auto g = feg::gamma_j(j, 2 * m, +1);
      CHECK(g.map.compose(g.map) == AffineMap::identity(2 * m + 1));
    }
    for (int i = 1; i <= m; ++i) {
      const auto a = feg::alpha_i(i, m);
      CHECK(a.map.compose(a.map) == AffineMap::identity(m + 1));
    }
  }
  CHECK_THROWS_AS(feg::gamma_j(5, 4, 1), std::invalid_argument);
}

TEST_CASE("generators commute") {
  const auto g1 = feg::gamma_j(1, 4, +1);
  const auto g2 = feg::gamma_j(2, 4, +1);
  CHECK(g1.map.compose(g2.map) == g2.map.compose(g1.map));
}

TEST_CASE("group orders") {
  for (int m = 1; m <= 5; ++m) {
    std::set<AffineMap> uniq;
    for (const auto& g : feg::quad_group(m)) uniq.insert(g.map);
    CHECK(uniq.size() == (1u << m));
  }
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> signs(2 * m, 1);
    for (int i = m; i < 2 * m; ++i) signs[i] = -1;
    std::set<AffineMap> uniq;
    for (const auto& g : feg::zeta_group(m, signs)) uniq.insert(g.map);
    CHECK(uniq.size() == (1u << (2 * m)));
  }
}

TEST_CASE("every element inverts exactly") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& g : feg::quad_group(m))
      CHECK(g.map.compose(g.map.inverse()) == AffineMap::identity(m + 1));
  std::vector<int> signs = {1, 1, -1, -1};
  for (const auto& g : feg::zeta_group(2, signs))
    CHECK(g.map.inverse().compose(g.map) == AffineMap::identity(5));
}

TEST_CASE("composite of all alpha_i maps the diagonal correctly") {
  const int m = 3;
  AffineMap composite = AffineMap::identity(m + 1);
  for (int i = 1; i <= m; ++i) composite = composite.compose(feg::alpha_i(i, m).map);
  // (s, s, s, w) -> (1-s, 1-s, 1-s, w + m(s - 1/2))
  const Rat s(3, 7), w(2, 5);
  std::vector<Rat> x = {s, s, s, w};
  const auto y = composite.apply(x);
  for (int i = 0; i < m; ++i) CHECK(y[i] == Rat(1) - s);
  CHECK(y[m] == w + Rat(m) * (s - Rat(1, 2)));
}

TEST_CASE("alpha_i fixes the half point") {
  const auto a = feg::alpha_i(2, 3);
  std::vector<Rat> x = {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(9, 4)};
  const auto y = a.map.apply(x);
  CHECK(y == x);
}

TEST_CASE("stabilizer subgroup") {
  // m = 1: {e, gamma_1 gamma_2}
  const auto s1 = feg::stabilizer_subgroup({1, -1});
  CHECK(s1.elements.size() == 2);
  CHECK_FALSE(s1.degenerate);
  for (const auto& g : s1.elements) CHECK(g.k_shift == 0);

  for (int m = 1; m <= 3; ++m) {
    std::vector<int> signs(2 * m, 1);
    for (int i = m; i < 2 * m; ++i) signs[i] = -1;
    const auto st = feg::stabilizer_subgroup(signs);
    CHECK(st.elements.size() == (1u << (2 * m - 1)));
    // generators (one from each sign block) all stabilize the index
    int zero_shift = 0;
    for (const auto& g : st.elements)
      if (g.k_shift == 0) ++zero_shift;
    // the zero-shift subset is exactly the balanced one: C(2m, m) elements
    CHECK(Int(zero_shift) == binomial(2 * m, m));
  }
  // degenerate pattern: even-size subsets with the flag
  const auto sd = feg::stabilizer_subgroup({1, 1, 1, 1});
  CHECK(sd.degenerate);
  CHECK(sd.elements.size() == 8);
}

TEST_CASE("polar orbit of w = 1") {
  // quadratic family: 2^m planes, all through ((1/2,...), 1)
  for (int m = 1; m <= 4; ++m) {
    const auto orbit = feg::polar_orbit(feg::quad_group(m), feg::w_equals_one(m));
    CHECK(orbit.size() == (1u << m));
    std::vector<Rat> center(m + 1, Rat(1, 2));
    center[m] = 1;
    for (const auto& h : orbit) CHECK(h.contains(center));
  }
  // zeta family: balanced count C(2m, m), through the center
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> signs(2 * m, 1);
    for (int i = m; i < 2 * m; ++i) signs[i] = -1;
    const auto orbit = feg::polar_orbit(feg::zeta_group(m, signs), feg::w_equals_one(2 * m));
    CHECK(Int(static_cast<long>(orbit.size())) == binomial(2 * m, m));
    std::vector<Rat> center(2 * m + 1, Rat(1, 2));
    center[2 * m] = 1;
    for (const auto& h : orbit) CHECK(h.contains(center));
  }
  // the base plane itself (identity element) is in the orbit
  const auto orbit = feg::polar_orbit(feg::quad_group(2), feg::w_equals_one(2));
  feg::Hyperplane base = feg::w_equals_one(2);
  CHECK(orbit.count(base) == 1);
}

TEST_CASE("dihedral group of order 12") {
  const auto group = feg::dihedral12();
  CHECK(group.size() == 12);
  std::set<AffineMap> uniq;
  for (const auto& g : group) uniq.insert(g.map);
  CHECK(uniq.size() == 12);

  const auto a = feg::d12_alpha().map;
  const auto b = feg::d12_beta().map;
  const auto id = AffineMap::identity(2);
  CHECK(a.compose(a) == id);
  CHECK(b.compose(b) == id);
  AffineMap ab = a.compose(b);
  AffineMap p = id;
  for (int i = 0; i < 6; ++i) p = p.compose(ab);
  CHECK(p == id);
  CHECK_FALSE(a.compose(b) == b.compose(a));
  // alpha fixes (1/2, 1); beta moves it to (1, 0)
  std::vector<Rat> c = {Rat(1, 2), Rat(1)};
  CHECK(a.apply(c) == c);
  CHECK(b.apply(c) == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("orbit chain of (1/2, -eps + it)") {
  const auto a = feg::d12_alpha().map;
  const auto b = feg::d12_beta().map;
  const Rat e(1, 100), t(2);
  feg::ComplexPointQ p;
  p.re = {Rat(1, 2), -e};
  p.im = {Rat(0), t};
  auto q = feg::apply(b, p);
  CHECK(q.re == std::vector<Rat>{-e, Rat(1) + e});
  CHECK(q.im == std::vector<Rat>{t, -t});
  q = feg::apply(a, q);
  CHECK(q.re == std::vector<Rat>{Rat(1) + e, Rat(-1, 2) - 2 * e});
  CHECK(q.im == std::vector<Rat>{-t, 2 * t});
  q = feg::apply(b, q);
  CHECK(q.re == std::vector<Rat>{-e, Rat(3, 2) + 2 * e});
  CHECK(q.im == std::vector<Rat>{t, -2 * t});
  q = feg::apply(a, q);
  CHECK(q.re == std::vector<Rat>{Rat(1) + e, -e});
  CHECK(q.im == std::vector<Rat>{-t, t});
  q = feg::apply(b, q);
  CHECK(q.re == std::vector<Rat>{Rat(1, 2), Rat(1) + e});
  CHECK(q.im == std::vector<Rat>{Rat(0), -t});
}

TEST_CASE("tube region hulls") {
  const auto r1 = feg::region_r1();
  const auto r2 = feg::region_r2();
  const auto r3 = feg::region_r3();
  const auto a = feg::d12_alpha();
  const auto b = feg::d12_beta();
  CHECK(feg::hull_union(r1, feg::image_region(a, r1)) == r2);
  CHECK(feg::hull_union(r2, feg::image_region(b, r2)) == r3);
  CHECK(feg::hull_union(r3, feg::image_region(a, r3)).is_whole_plane());
}

TEST_CASE("hull contains both arguments (random membership)") {
  const auto r1 = feg::region_r1();
  const auto a = feg::d12_alpha();
  const auto ar1 = feg::image_region(a, r1);
  const auto hull = feg::hull_union(r1, ar1);
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 1000) {
    const Rat x(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 50));
    const Rat y(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 50));
    const bool in1 = r1.contains(x, y);
    const bool in2 = ar1.contains(x, y);
    if (!in1 && !in2) continue;
    ++tested;
    CHECK(hull.contains(x, y));
  }
}

TEST_CASE("image under the inverse undoes the region map") {
  const auto r2 = feg::region_r2();
  const auto b = feg::d12_beta();
  const auto forth = feg::image_region(b, r2);
  GroupElement binv;
  binv.map = b.map.inverse();
  CHECK(feg::image_region(binv, forth) == r2);
}

TEST_CASE("empty region signals") {
  CHECK_THROWS_AS(feg::TubeBase({{Rat(1), Rat(0), Rat(1)}, {Rat(-1), Rat(0), Rat(0)}}),
                  std::domain_error);
}

TEST_CASE("pole polynomial factor multiset") {
  const auto res = feg::pole_polynomial_check();
  CHECK(res.match);
  CHECK(res.total_degree == 23);
  CHECK(res.mismatches.empty());
  // every printed factor vanishes on the image of {s=1} or {w=1} under a listed map
  // (equivalent to membership in the computed multiset, which `match` asserts)
  CHECK(res.computed == res.printed);
}
