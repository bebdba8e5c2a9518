// SPDX-License-Identifier: Apache-2.0
#include "regions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdsmom::feg {

namespace {

using Pt = std::pair<Rat, Rat>;

Rat dot(const HalfPlane& h, const Pt& p) {
  Rat s = h.a * p.first + h.b * p.second;
  s.canonicalize();
  return s;
}

Pt normalize_dir(Pt d) {
  std::vector<Rat> v = {d.first, d.second};
  Rat s = primitive_scale(v);
  // keep orientation: scale by positive factor only
  if (s == 0) return {Rat(0), Rat(0)};
  if (s < 0) s = -s;
  d.first /= s;
  d.first.canonicalize();
  d.second /= s;
  d.second.canonicalize();
  return d;
}

struct VRep {
  std::vector<Pt> points;
  std::vector<Pt> rays;
  bool feasible = false;
};

std::optional<Pt> intersect_lines(const HalfPlane& h1, const HalfPlane& h2) {
  const Rat det = h1.a * h2.b - h1.b * h2.a;
  if (det == 0) return std::nullopt;
  Rat x = (h1.c * h2.b - h1.b * h2.c) / det;
  Rat y = (h1.a * h2.c - h1.c * h2.a) / det;
  x.canonicalize();
  y.canonicalize();
  return Pt{x, y};
}

bool closure_contains(const std::vector<HalfPlane>& cons, const Pt& p) {
  for (const auto& h : cons)
    if (dot(h, p) < h.c) return false;
  return true;
}

bool all_normals_parallel(const std::vector<HalfPlane>& cons) {
  for (size_t i = 1; i < cons.size(); ++i) {
    Rat cr = cons[0].a * cons[i].b - cons[0].b * cons[i].a;
    if (cr != 0) return false;
  }
  return true;
}

// V-representation of the closure of the intersection.
VRep to_vrep(const std::vector<HalfPlane>& cons) {
  VRep v;
  if (cons.empty()) {
    // whole plane: one point, four spanning rays
    v.feasible = true;
    v.points.push_back({Rat(0), Rat(0)});
    v.rays = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
    return v;
  }
  // vertices
  std::set<Pt> pts;
  for (size_t i = 0; i < cons.size(); ++i)
    for (size_t j = i + 1; j < cons.size(); ++j) {
      auto p = intersect_lines(cons[i], cons[j]);
      if (p && closure_contains(cons, *p)) pts.insert(*p);
    }
  // recession-cone boundary rays
  std::set<Pt> rays;
  for (const auto& h : cons) {
    for (Pt d : {Pt{h.b, -h.a}, Pt{-h.b, h.a}}) {
      bool ok = true;
      for (const auto& g : cons) {
        Rat s = g.a * d.first + g.b * d.second;
        if (s < 0) { ok = false; break; }
      }
      if (ok) rays.insert(normalize_dir(d));
    }
  }
  // halfplane cone needs an interior generator
  bool has_opposite = false;
  for (const auto& r : rays)
    if (rays.count({-r.first, -r.second})) { has_opposite = true; break; }
  if (has_opposite && all_normals_parallel(cons)) {
    bool same_direction = true;
    for (size_t i = 1; i < cons.size(); ++i) {
      Rat s = cons[0].a * cons[i].a + cons[0].b * cons[i].b;
      if (s < 0) { same_direction = false; break; }
    }
    if (same_direction) rays.insert(normalize_dir({cons[0].a, cons[0].b}));
  }

  if (!pts.empty()) {
    v.feasible = true;
    v.points.assign(pts.begin(), pts.end());
    v.rays.assign(rays.begin(), rays.end());
    return v;
  }

  // no vertex: either all normals parallel (slab / halfplane) or empty
  if (all_normals_parallel(cons)) {
    // parametrize x = t * n / (n.n) along the common normal n
    const Rat nn = cons[0].a * cons[0].a + cons[0].b * cons[0].b;
    std::optional<Rat> lo, hi;
    for (const auto& h : cons) {
      const Rat proj = (h.a * cons[0].a + h.b * cons[0].b) / nn;  // h.n = proj * n
      // constraint h.a x + h.b y >= h.c becomes proj * t >= h.c
      Rat bound = h.c / proj;
      bound.canonicalize();
      if (proj > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) return v;  // empty
    v.feasible = true;
    auto at = [&](const Rat& t) {
      Rat x = t * cons[0].a / nn, y = t * cons[0].b / nn;
      x.canonicalize();
      y.canonicalize();
      return Pt{x, y};
    };
    if (lo) v.points.push_back(at(*lo));
    if (hi) v.points.push_back(at(*hi));
    if (v.points.empty()) v.points.push_back({Rat(0), Rat(0)});
    v.rays.assign(rays.begin(), rays.end());
    return v;
  }
  return v;  // infeasible
}

// conv(points) + cone(rays) back to half-planes (not yet minimal).
std::vector<HalfPlane> from_vrep(const std::vector<Pt>& points, const std::vector<Pt>& rays) {
  std::vector<std::pair<Pt, Pt>> cand;  // (point on line, direction)
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      Pt d{points[j].first - points[i].first, points[j].second - points[i].second};
      if (d.first == 0 && d.second == 0) continue;
      cand.push_back({points[i], d});
    }
  for (const auto& p : points)
    for (const auto& r : rays) cand.push_back({p, r});

  std::set<HalfPlane> out;
  for (const auto& [p, d] : cand) {
    for (int orient = 0; orient < 2; ++orient) {
      HalfPlane h;
      h.a = orient ? d.second : -d.second;
      h.b = orient ? -d.first : d.first;
      h.c = h.a * p.first + h.b * p.second;
      h.c.canonicalize();
      bool ok = true;
      for (const auto& q : points)
        if (dot(h, q) < h.c) { ok = false; break; }
      if (ok)
        for (const auto& r : rays) {
          Rat s = h.a * r.first + h.b * r.second;
          if (s < 0) { ok = false; break; }
        }
      if (ok) {
        h.normalize();
        out.insert(h);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

void HalfPlane::normalize() {
  std::vector<Rat> v = {a, b, c};
  Rat s = primitive_scale(v);
  if (s == 0 || (a == 0 && b == 0)) throw std::domain_error("HalfPlane: zero normal");
  if (s < 0) s = -s;  // direction must be preserved
  a /= s; a.canonicalize();
  b /= s; b.canonicalize();
  c /= s; c.canonicalize();
}

TubeBase::TubeBase(std::vector<HalfPlane> constraints) {
  for (auto& h : constraints) h.normalize();
  std::set<HalfPlane> uniq(constraints.begin(), constraints.end());
  std::vector<HalfPlane> cons(uniq.begin(), uniq.end());

  // drop strictly weaker parallel copies and verify feasibility
  if (!to_vrep(cons).feasible) throw std::domain_error("TubeBase: empty region");

  // remove redundant constraints (on closures; valid for full-dimensional regions)
  for (size_t i = 0; i < cons.size();) {
    std::vector<HalfPlane> others;
    for (size_t j = 0; j < cons.size(); ++j)
      if (j != i) others.push_back(cons[j]);
    const VRep v = to_vrep(others);
    bool redundant = v.feasible;
    if (redundant)
      for (const auto& p : v.points)
        if (dot(cons[i], p) < cons[i].c) { redundant = false; break; }
    if (redundant)
      for (const auto& r : v.rays) {
        Rat s = cons[i].a * r.first + cons[i].b * r.second;
        if (s < 0) { redundant = false; break; }
      }
    if (redundant) cons.erase(cons.begin() + i);
    else ++i;
  }
  std::sort(cons.begin(), cons.end());
  cons_ = std::move(cons);

  // the open region must itself be nonempty
  interior_point();
}

bool TubeBase::contains(const Rat& x, const Rat& y) const {
  for (const auto& h : cons_) {
    Rat s = h.a * x + h.b * y;
    s.canonicalize();
    if (!(s > h.c)) return false;
  }
  return true;
}

bool TubeBase::contains_closure(const Rat& x, const Rat& y) const {
  return closure_contains(cons_, {x, y});
}

std::pair<Rat, Rat> TubeBase::interior_point() const {
  if (cons_.empty()) return {Rat(0), Rat(0)};
  Rat slack(1);
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<HalfPlane> slacked = cons_;
    for (auto& h : slacked) h.c += slack;
    const VRep v = to_vrep(slacked);
    if (v.feasible && !v.points.empty()) return v.points.front();
    slack /= 2;
  }
  throw std::domain_error("TubeBase: empty interior");
}

std::string TubeBase::str() const {
  std::ostringstream os;
  if (cons_.empty()) return "(whole plane)";
  for (size_t i = 0; i < cons_.size(); ++i) {
    if (i) os << " & ";
    os << cons_[i].a.get_str() << "*sigma + " << cons_[i].b.get_str() << "*nu > "
       << cons_[i].c.get_str();
  }
  return os.str();
}

TubeBase region_r1() {
  // strictly above the polygon through (0, 5/2) and (3/2, 0) with boundary
  // slopes -3 (left ray), -5/3 (middle edge), -1 (right ray)
  return TubeBase({{Rat(3), Rat(1), Rat(5, 2)},
                   {Rat(5, 3), Rat(1), Rat(5, 2)},
                   {Rat(1), Rat(1), Rat(3, 2)}});
}

TubeBase region_r2() {
  // strictly above the segment (-1/2, 3) -- (3/2, 0) with rays of slope -2 and -1
  return TubeBase({{Rat(2), Rat(1), Rat(2)},
                   {Rat(3, 2), Rat(1), Rat(9, 4)},
                   {Rat(1), Rat(1), Rat(3, 2)}});
}

TubeBase region_r3() { return TubeBase({{Rat(2), Rat(1), Rat(2)}}); }

TubeBase image_region(const GroupElement& g, const TubeBase& r) {
  if (r.is_whole_plane()) return r;
  const AffineMap inv = g.map.inverse();
  std::vector<HalfPlane> out;
  for (const auto& h : r.constraints()) {
    HalfPlane m;
    m.a = h.a * inv.matrix[0][0] + h.b * inv.matrix[1][0];
    m.b = h.a * inv.matrix[0][1] + h.b * inv.matrix[1][1];
    Rat c = h.c - (h.a * inv.offset[0] + h.b * inv.offset[1]);
    c.canonicalize();
    m.c = c;
    out.push_back(m);
  }
  return TubeBase(out);
}

TubeBase hull_union(const TubeBase& u, const TubeBase& v) {
  if (u.is_whole_plane() || v.is_whole_plane()) return TubeBase::whole_plane();
  const VRep vu = to_vrep(u.constraints());
  const VRep vv = to_vrep(v.constraints());
  std::vector<Pt> points = vu.points;
  points.insert(points.end(), vv.points.begin(), vv.points.end());
  std::vector<Pt> rays = vu.rays;
  rays.insert(rays.end(), vv.rays.begin(), vv.rays.end());
  auto cons = from_vrep(points, rays);
  if (cons.empty()) return TubeBase::whole_plane();
  return TubeBase(cons);
}

}  // namespace mdsmom::feg
