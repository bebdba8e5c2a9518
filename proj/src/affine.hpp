// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mdsmom::feg {

// Exact rational affine map x -> A x + b on a fixed coordinate space.
struct AffineMap {
  std::vector<std::vector<Rat>> matrix;  // n x n
  std::vector<Rat> offset;               // n

  static AffineMap identity(int n);
  int dim() const { return static_cast<int>(offset.size()); }

  AffineMap compose(const AffineMap& inner) const;  // this ∘ inner
  AffineMap inverse() const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  std::vector<Rat> apply_linear(const std::vector<Rat>& x) const;  // A x (no offset)

  bool operator==(const AffineMap& o) const { return matrix == o.matrix && offset == o.offset; }
  bool operator<(const AffineMap& o) const {
    return matrix != o.matrix ? matrix < o.matrix : offset < o.offset;
  }
};

// A group element: canonical affine form plus the k-index bookkeeping and a
// generator word (for reporting).
struct GroupElement {
  AffineMap map;
  int k_shift = 0;
  std::vector<int> word;

  bool operator<(const GroupElement& o) const { return map < o.map; }
};

// Involution on (s_1..s_2m, w): s_j -> 1 - s_j, w -> w + s_j - 1/2.
// `sign` is the epsilon_j of the ambient sign pattern (the k-index moves by it).
GroupElement gamma_j(int j, int two_m, int sign);

// Involution on (s_1..s_m, w): s_i -> 1 - s_i, w -> w + s_i - 1/2.
GroupElement alpha_i(int i, int m);

// Full abelian group generated by gamma_1..gamma_2m under the given sign
// pattern; 2^2m elements, k_shift of the subset S is sum_{j in S} eps_j.
std::vector<GroupElement> zeta_group(int m, const std::vector<int>& signs);

// Group generated by alpha_1..alpha_m; 2^m elements, k_shift = 0.
std::vector<GroupElement> quad_group(int m);

struct Stabilizer {
  std::vector<GroupElement> elements;  // order 2^(2m-1)
  bool degenerate = false;             // all-equal sign pattern
};

// Subgroup generated by the mixed pairs gamma_i gamma_j (eps_i = +1, eps_j = -1).
// For a degenerate pattern (r = 0 or 2m) returns the even-size subsets with a flag.
Stabilizer stabilizer_subgroup(const std::vector<int>& signs);

// Rational hyperplane {x : normal . x = offset}, normalized to a primitive
// integer normal with positive leading coefficient.
struct Hyperplane {
  std::vector<Rat> normal;
  Rat offset;

  void normalize();
  bool contains(const std::vector<Rat>& point) const;
  bool operator<(const Hyperplane& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
  bool operator==(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
};

Hyperplane image_plane(const GroupElement& g, const Hyperplane& h);

// Orbit of the base plane under the k-stabilizing elements (k_shift == 0).
std::set<Hyperplane> polar_orbit(const std::vector<GroupElement>& group, const Hyperplane& base);

// Plane {w = 1} in n+1 coordinates (s_1..s_n, w).
Hyperplane w_equals_one(int n_s);

// Dihedral group generated by a: (s,w) -> (1-s, w+3s-3/2) and
// b: (s,w) -> (s+w-1/2, 1-w); 12 elements. Words use 0 for a, 1 for b,
// listed outermost-first (word {0,1} is the map x -> a(b(x))).
std::vector<GroupElement> dihedral12();
GroupElement d12_alpha();
GroupElement d12_beta();

// Exact orbit of a Gaussian-rational point (re + i*im componentwise).
struct ComplexPointQ {
  std::vector<Rat> re, im;
  bool operator==(const ComplexPointQ& o) const { return re == o.re && im == o.im; }
};
ComplexPointQ apply(const AffineMap& m, const ComplexPointQ& p);

// ----- pole-polynomial bookkeeping (two variables s, w) -----

// Linear factor c_s s + c_w w + c_0, primitive-integer normalized.
struct LinFactor2 {
  Rat cs, cw, c0;
  void normalize();
  bool operator<(const LinFactor2& o) const {
    if (cs != o.cs) return cs < o.cs;
    if (cw != o.cw) return cw < o.cw;
    return c0 < o.c0;
  }
  bool operator==(const LinFactor2& o) const { return cs == o.cs && cw == o.cw && c0 == o.c0; }
  std::string str() const;
};

// Pull back a factor along g: returns the factor of (l ∘ g)(s, w).
LinFactor2 pullback(const LinFactor2& l, const GroupElement& g);

struct PoleCheckResult {
  bool match = false;
  int total_degree = 0;
  std::map<LinFactor2, int> computed;  // product of P∘g over the 6 listed maps, one 3s+2w-3 removed
  std::map<LinFactor2, int> printed;   // the reference polar polynomial
  std::vector<std::string> mismatches;
};

// Forms prod P(g(s,w)) over g in {id, a, b, ba, ab, aba} with
// P(s,w) = (s-1)^3 (w-1), removes one factor 3s+2w-3, and compares the factor
// multiset with the full polar polynomial of the continuation argument.
PoleCheckResult pole_polynomial_check();

}  // namespace mdsmom::feg
