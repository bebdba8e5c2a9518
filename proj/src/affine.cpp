// SPDX-License-Identifier: Apache-2.0
#include "affine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mdsmom::feg {

AffineMap AffineMap::identity(int n) {
  AffineMap m;
  m.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  m.offset.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) m.matrix[i][i] = 1;
  return m;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  const int n = dim();
  AffineMap out;
  out.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  out.offset = offset;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int k = 0; k < n; ++k) s += matrix[i][k] * inner.matrix[k][j];
      s.canonicalize();
      out.matrix[i][j] = s;
    }
    Rat s(0);
    for (int k = 0; k < n; ++k) s += matrix[i][k] * inner.offset[k];
    s.canonicalize();
    out.offset[i] += s;
    out.offset[i].canonicalize();
  }
  return out;
}

AffineMap AffineMap::inverse() const {
  const int n = dim();
  // Gauss-Jordan on [A | I]
  std::vector<std::vector<Rat>> a = matrix;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("AffineMap::inverse: singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat d = a[col][col];
    for (int j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        a[r][j].canonicalize();
        inv[r][j] -= f * inv[col][j];
        inv[r][j].canonicalize();
      }
    }
  }
  AffineMap out;
  out.matrix = inv;
  out.offset.assign(n, Rat(0));
  // x = A^{-1}(y - b)
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int k = 0; k < n; ++k) s -= inv[i][k] * offset[k];
    s.canonicalize();
    out.offset[i] = s;
  }
  return out;
}

std::vector<Rat> AffineMap::apply(const std::vector<Rat>& x) const {
  const int n = dim();
  std::vector<Rat> y(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s = offset[i];
    for (int k = 0; k < n; ++k) s += matrix[i][k] * x[k];
    s.canonicalize();
    y[i] = s;
  }
  return y;
}

std::vector<Rat> AffineMap::apply_linear(const std::vector<Rat>& x) const {
  const int n = dim();
  std::vector<Rat> y(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int k = 0; k < n; ++k) s += matrix[i][k] * x[k];
    s.canonicalize();
    y[i] = s;
  }
  return y;
}

namespace {

// s_j -> 1 - s_j, w -> w + s_j - 1/2 on coordinates (s_1..s_n, w).
AffineMap reflect_coordinate(int j, int n_s) {
  AffineMap m = AffineMap::identity(n_s + 1);
  m.matrix[j][j] = -1;
  m.offset[j] = 1;
  m.matrix[n_s][j] = 1;
  m.offset[n_s] = Rat(-1, 2);
  return m;
}

}  // namespace

GroupElement gamma_j(int j, int two_m, int sign) {
  if (j < 1 || j > two_m) throw std::invalid_argument("gamma_j: index out of range");
  GroupElement g;
  g.map = reflect_coordinate(j - 1, two_m);
  g.k_shift = sign;
  g.word = {j};
  return g;
}

GroupElement alpha_i(int i, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("alpha_i: index out of range");
  GroupElement g;
  g.map = reflect_coordinate(i - 1, m);
  g.k_shift = 0;
  g.word = {i};
  return g;
}

namespace {

std::vector<GroupElement> subset_group(int n_s, const std::vector<int>& shifts) {
  std::vector<GroupElement> out;
  const int n = static_cast<int>(shifts.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    GroupElement g;
    g.map = AffineMap::identity(n_s + 1);
    g.k_shift = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j))) continue;
      g.map = g.map.compose(reflect_coordinate(j, n_s));
      g.k_shift += shifts[j];
      g.word.push_back(j + 1);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<GroupElement> zeta_group(int m, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != 2 * m)
    throw std::invalid_argument("zeta_group: sign pattern must have 2m entries");
  return subset_group(2 * m, signs);
}

std::vector<GroupElement> quad_group(int m) {
  return subset_group(m, std::vector<int>(m, 0));
}

Stabilizer stabilizer_subgroup(const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size());
  int r = 0;
  for (int s : signs)
    if (s > 0) ++r;
  Stabilizer out;
  out.degenerate = (r == 0 || r == n);
  auto all = subset_group(n, signs);
  for (auto& g : all) {
    int plus = 0, minus = 0;
    for (int j : g.word) (signs[j - 1] > 0 ? plus : minus)++;
    const bool keep = out.degenerate ? ((plus + minus) % 2 == 0) : ((plus - minus) % 2 == 0);
    if (keep) out.elements.push_back(std::move(g));
  }
  return out;
}

void Hyperplane::normalize() {
  std::vector<Rat> all = normal;
  all.push_back(offset);
  Rat s = primitive_scale(all);
  for (const Rat& c : normal)
    if (c != 0) {
      if (c < 0) s = -s;
      break;
    }
  if (s == 0) throw std::domain_error("Hyperplane: zero normal");
  for (Rat& c : normal) { c /= s; c.canonicalize(); }
  offset /= s;
  offset.canonicalize();
}

bool Hyperplane::contains(const std::vector<Rat>& point) const {
  Rat s(0);
  for (size_t i = 0; i < normal.size(); ++i) s += normal[i] * point[i];
  s.canonicalize();
  return s == offset;
}

Hyperplane image_plane(const GroupElement& g, const Hyperplane& h) {
  // x in g(H) iff g^{-1} x in H iff (A^{-T} n) . x = c + n . (A^{-1} b)
  const AffineMap inv = g.map.inverse();
  const int n = inv.dim();
  Hyperplane out;
  out.normal.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat s(0);
    for (int i = 0; i < n; ++i) s += h.normal[i] * inv.matrix[i][j];
    s.canonicalize();
    out.normal[j] = s;
  }
  Rat c = h.offset;
  for (int i = 0; i < n; ++i) c -= h.normal[i] * inv.offset[i];
  c.canonicalize();
  out.offset = c;
  out.normalize();
  return out;
}

std::set<Hyperplane> polar_orbit(const std::vector<GroupElement>& group, const Hyperplane& base) {
  std::set<Hyperplane> out;
  for (const auto& g : group) {
    if (g.k_shift != 0) continue;
    out.insert(image_plane(g, base));
  }
  return out;
}

Hyperplane w_equals_one(int n_s) {
  Hyperplane h;
  h.normal.assign(n_s + 1, Rat(0));
  h.normal[n_s] = 1;
  h.offset = 1;
  h.normalize();
  return h;
}

GroupElement d12_alpha() {
  GroupElement g;
  g.map = AffineMap::identity(2);
  // (s, w) -> (1 - s, w + 3s - 3/2)
  g.map.matrix = {{Rat(-1), Rat(0)}, {Rat(3), Rat(1)}};
  g.map.offset = {Rat(1), Rat(-3, 2)};
  g.word = {0};
  return g;
}

GroupElement d12_beta() {
  GroupElement g;
  g.map = AffineMap::identity(2);
  // (s, w) -> (s + w - 1/2, 1 - w)
  g.map.matrix = {{Rat(1), Rat(1)}, {Rat(0), Rat(-1)}};
  g.map.offset = {Rat(-1, 2), Rat(1)};
  g.word = {1};
  return g;
}

std::vector<GroupElement> dihedral12() {
  const GroupElement gens[2] = {d12_alpha(), d12_beta()};
  std::map<AffineMap, std::vector<int>> seen;
  GroupElement id;
  id.map = AffineMap::identity(2);
  seen[id.map] = {};
  std::vector<GroupElement> frontier = {id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (int a = 0; a < 2; ++a) {
        GroupElement h;
        h.map = gens[a].map.compose(g.map);
        if (seen.count(h.map)) continue;
        h.word = g.word;
        h.word.insert(h.word.begin(), a);
        seen[h.map] = h.word;
        next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out;
  for (const auto& [m, w] : seen) {
    GroupElement g;
    g.map = m;
    g.word = w;
    out.push_back(std::move(g));
  }
  return out;
}

ComplexPointQ apply(const AffineMap& m, const ComplexPointQ& p) {
  ComplexPointQ out;
  out.re = m.apply(p.re);
  out.im = m.apply_linear(p.im);
  return out;
}

void LinFactor2::normalize() {
  std::vector<Rat> v = {cs, cw, c0};
  Rat s = primitive_scale(v);
  for (const Rat& c : v)
    if (c != 0) {
      if (c < 0) s = -s;
      break;
    }
  if (s == 0) throw std::domain_error("LinFactor2: zero factor");
  cs /= s; cs.canonicalize();
  cw /= s; cw.canonicalize();
  c0 /= s; c0.canonicalize();
}

std::string LinFactor2::str() const {
  std::ostringstream os;
  os << cs.get_str() << "*s + " << cw.get_str() << "*w + " << c0.get_str();
  return os.str();
}

LinFactor2 pullback(const LinFactor2& l, const GroupElement& g) {
  // (l ∘ g)(x) = cs * g_s(x) + cw * g_w(x) + c0
  LinFactor2 out;
  out.cs = l.cs * g.map.matrix[0][0] + l.cw * g.map.matrix[1][0];
  out.cw = l.cs * g.map.matrix[0][1] + l.cw * g.map.matrix[1][1];
  out.c0 = l.c0 + l.cs * g.map.offset[0] + l.cw * g.map.offset[1];
  out.cs.canonicalize();
  out.cw.canonicalize();
  out.c0.canonicalize();
  out.normalize();
  return out;
}

namespace {

void add_factor(std::map<LinFactor2, int>& ms, Rat cs, Rat cw, Rat c0, int mult) {
  LinFactor2 f{cs, cw, c0};
  f.normalize();
  ms[f] += mult;
}

}  // namespace

PoleCheckResult pole_polynomial_check() {
  PoleCheckResult res;
  const GroupElement a = d12_alpha();
  const GroupElement b = d12_beta();
  GroupElement id;
  id.map = AffineMap::identity(2);
  GroupElement ba, ab, aba;
  ba.map = b.map.compose(a.map);
  ab.map = a.map.compose(b.map);
  aba.map = a.map.compose(b.map.compose(a.map));

  const std::vector<const GroupElement*> list = {&id, &a, &b, &ba, &ab, &aba};
  // P(s, w) = (s-1)^3 (w-1)
  LinFactor2 s_minus_1{Rat(1), Rat(0), Rat(-1)};
  LinFactor2 w_minus_1{Rat(0), Rat(1), Rat(-1)};
  for (const auto* g : list) {
    res.computed[pullback(s_minus_1, *g)] += 3;
    res.computed[pullback(w_minus_1, *g)] += 1;
  }
  // remove the one redundant 3s + 2w - 3
  LinFactor2 red{Rat(3), Rat(2), Rat(-3)};
  red.normalize();
  auto it = res.computed.find(red);
  if (it == res.computed.end() || it->second < 1) {
    res.mismatches.push_back("expected factor 3s+2w-3 not present");
    return res;
  }
  if (--it->second == 0) res.computed.erase(it);

  // the polar polynomial as printed in the continuation argument
  add_factor(res.printed, Rat(1), Rat(0), Rat(0), 3);           // s^3
  add_factor(res.printed, Rat(1), Rat(0), Rat(-1), 3);          // (s-1)^3
  add_factor(res.printed, Rat(1), Rat(1), Rat(-3, 2), 3);       // (s+w-3/2)^3
  add_factor(res.printed, Rat(2), Rat(1), Rat(-1), 3);          // (2s+w-1)^3
  add_factor(res.printed, Rat(1), Rat(1), Rat(-1, 2), 3);       // (s+w-1/2)^3
  add_factor(res.printed, Rat(2), Rat(1), Rat(-2), 3);          // (2s+w-2)^3
  add_factor(res.printed, Rat(0), Rat(1), Rat(0), 1);           // w
  add_factor(res.printed, Rat(0), Rat(1), Rat(-1), 1);          // w-1
  add_factor(res.printed, Rat(3), Rat(1), Rat(-5, 2), 1);       // 3s+w-5/2
  add_factor(res.printed, Rat(3), Rat(2), Rat(-3), 1);          // 3s+2w-3
  add_factor(res.printed, Rat(3), Rat(1), Rat(-3, 2), 1);       // 3s+w-3/2

  int deg = 0;
  for (const auto& [f, m] : res.printed) deg += m;
  res.total_degree = deg;

  res.match = (res.computed == res.printed);
  if (!res.match) {
    for (const auto& [f, m] : res.printed) {
      auto jt = res.computed.find(f);
      const int have = jt == res.computed.end() ? 0 : jt->second;
      if (have != m)
        res.mismatches.push_back("factor " + f.str() + ": computed multiplicity " +
                                 std::to_string(have) + ", printed " + std::to_string(m));
    }
    for (const auto& [f, m] : res.computed)
      if (!res.printed.count(f))
        res.mismatches.push_back("extra computed factor " + f.str());
  }
  return res;
}

}  // namespace mdsmom::feg
