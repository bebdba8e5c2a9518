// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affine.hpp"
#include "rational.hpp"

namespace mdsmom::feg {

// Open half-plane a*x + b*y > c with primitive integer (a, b, c).
struct HalfPlane {
  Rat a, b, c;
  void normalize();
  bool operator<(const HalfPlane& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  bool operator==(const HalfPlane& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Open convex region in the (sigma, nu) plane: intersection of open
// half-planes, kept as a canonical minimal set (redundancies removed,
// sorted). The whole plane is the empty constraint list.
class TubeBase {
 public:
  TubeBase() = default;
  explicit TubeBase(std::vector<HalfPlane> constraints);

  static TubeBase whole_plane() { return TubeBase(); }

  const std::vector<HalfPlane>& constraints() const { return cons_; }
  bool is_whole_plane() const { return cons_.empty(); }
  bool contains(const Rat& x, const Rat& y) const;      // strict
  bool contains_closure(const Rat& x, const Rat& y) const;
  bool operator==(const TubeBase& o) const { return cons_ == o.cons_; }

  // A strictly interior rational point (throws if the region is empty).
  std::pair<Rat, Rat> interior_point() const;

  std::string str() const;

 private:
  std::vector<HalfPlane> cons_;
};

// The three tube bases of the two-variable continuation argument.
TubeBase region_r1();
TubeBase region_r2();
TubeBase region_r3();

// Image of a region under a 2D affine group element.
TubeBase image_region(const GroupElement& g, const TubeBase& r);

// Convex hull of the union (computed on closures, strictness restored).
TubeBase hull_union(const TubeBase& u, const TubeBase& v);

}  // namespace mdsmom::feg
