// SPDX-License-Identifier: Apache-2.0
#include "residue.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdsmom::residue {

using poly::FactoredFraction;
using poly::LinearForm;
using poly::MPoly;

namespace {

// ----- specialized (eps, v) orbit sums: var 0 = eps, var 1 = v -----

LinearForm eps_form(const Rat& coef) { return LinearForm{{coef, Rat(0)}}; }
LinearForm v_plus(const Rat& coef) { return LinearForm{{coef, Rat(1)}}; }

void require_nonzero(const Rat& coef) {
  if (coef == 0)
    throw std::invalid_argument("orbit_sum: degenerate specialization (zero denominator factor)");
}

FactoredFraction quad_term(int m, const std::vector<long>& c, unsigned mask, const Rat& fvalue,
                           int fdeg) {
  FactoredFraction t(2);
  Rat vshift(0);
  std::vector<Rat> s(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = mask & (1u << i);
    s[i] = Rat(c[i]) * (flip ? -1 : 1);
    if (flip) vshift += Rat(c[i]);
  }
  // numerator: f evaluated on the transformed specialization, times eps^deg
  if (fdeg > 0) {
    MPoly mono(2);
    MPoly::Expo e = {fdeg, 0};
    mono.add_term(e, Rat(1));
    t.multiply_numerator(mono);
  }
  t.multiply_scalar(fvalue);
  t.divide_by_form(v_plus(vshift));
  for (int i = 0; i < m; ++i) {
    require_nonzero(s[i]);
    t.divide_by_form(eps_form(s[i]));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Rat coef = s[i] + s[j];
      require_nonzero(coef);
      t.divide_by_form(eps_form(coef));
    }
  return t;
}

// One orbit term per balanced index subset: the reflection sending the t-th
// flipped upper variable u_i and t-th flipped lower variable u_j to
// (-u_j, -u_i), with v picking up u_i + u_j. One representative per polar
// hyperplane; the full reflection group repeats each term (m!)^2 times.
FactoredFraction zeta_term(int m, const std::vector<long>& c, unsigned mask, const Rat& fvalue,
                           int fdeg) {
  const int n = 2 * m;
  std::vector<int> top, bottom;
  for (int i = 0; i < m; ++i)
    if (mask & (1u << i)) top.push_back(i);
  for (int j = m; j < n; ++j)
    if (mask & (1u << j)) bottom.push_back(j);
  FactoredFraction t(2);
  Rat vshift(0);
  std::vector<Rat> s(n);
  for (int i = 0; i < n; ++i) s[i] = Rat(c[i]);
  for (size_t k = 0; k < top.size(); ++k) {
    s[top[k]] = Rat(-c[bottom[k]]);
    s[bottom[k]] = Rat(-c[top[k]]);
    vshift += Rat(c[top[k]]) + Rat(c[bottom[k]]);
  }
  if (fdeg > 0) {
    MPoly mono(2);
    MPoly::Expo e = {fdeg, 0};
    mono.add_term(e, Rat(1));
    t.multiply_numerator(mono);
  }
  t.multiply_scalar(fvalue);
  t.divide_by_form(v_plus(vshift));
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j) {
      const Rat coef = s[i] + s[j];
      require_nonzero(coef);
      t.divide_by_form(eps_form(coef));
    }
  return t;
}

bool zeta_mask_balanced(unsigned mask, int m) {
  int plus = 0, minus = 0;
  for (int i = 0; i < 2 * m; ++i)
    if (mask & (1u << i)) (i < m ? plus : minus)++;
  return plus == minus;
}

// transformed block coordinates for the representative of `mask`
std::vector<std::pair<int, int>> zeta_signed_perm(int m, unsigned mask) {
  const int n = 2 * m;
  std::vector<int> top, bottom;
  for (int i = 0; i < m; ++i)
    if (mask & (1u << i)) top.push_back(i);
  for (int j = m; j < n; ++j)
    if (mask & (1u << j)) bottom.push_back(j);
  std::vector<std::pair<int, int>> image(n);  // (source index, sign)
  for (int i = 0; i < n; ++i) image[i] = {i, 1};
  for (size_t k = 0; k < top.size(); ++k) {
    image[top[k]] = {bottom[k], -1};
    image[bottom[k]] = {top[k], -1};
  }
  return image;
}

FactoredFraction orbit_sum_with_f(Family family, int m, const std::vector<long>& mult,
                                  const MPoly* f_full) {
  const int nblock = family == Family::quad ? m : 2 * m;
  if (static_cast<int>(mult.size()) != nblock)
    throw std::invalid_argument("orbit_sum: multiplier count mismatch");
  int fdeg = 0;
  if (f_full && !f_full->is_homogeneous(&fdeg))
    throw std::invalid_argument("orbit_sum: f must be homogeneous");
  FactoredFraction sum = FactoredFraction::zero(2);
  for (unsigned mask = 0; mask < (1u << nblock); ++mask) {
    if (family == Family::zeta && !zeta_mask_balanced(mask, m)) continue;
    Rat fvalue(1);
    if (f_full) {
      std::vector<Rat> point(nblock);
      if (family == Family::quad) {
        for (int i = 0; i < nblock; ++i)
          point[i] = Rat(mult[i]) * ((mask & (1u << i)) ? -1 : 1);
      } else {
        const auto image = zeta_signed_perm(m, mask);
        for (int i = 0; i < nblock; ++i)
          point[i] = Rat(mult[image[i].first]) * image[i].second;
      }
      fvalue = f_full->evaluate(point);
    }
    if (fvalue == 0 && f_full) continue;
    sum = sum + (family == Family::quad ? quad_term(m, mult, mask, fvalue, fdeg)
                                        : zeta_term(m, mult, mask, fvalue, fdeg));
  }
  return sum;
}

Rat extract_limit(const FactoredFraction& s, int M) {
  // lim_{v->0} lim_{eps->0} v^(M+1) * s for s = scale * num / prod (a eps + b v)^k
  if (s.is_zero()) return Rat(0);
  Rat denom_scale(1);
  int total_mult = 0;
  for (const auto& [f, k] : s.denominator()) {
    const Rat& b = f.coeffs[1];
    if (b == 0)
      throw std::domain_error("orbit residue: pure-eps denominator factor survived; limit does not exist");
    for (int i = 0; i < k; ++i) denom_scale *= b;
    total_mult += k;
  }
  // numerator at eps = 0: lowest v-power L and its coefficient
  int L = -1;
  Rat cL(0);
  for (const auto& [e, c] : s.numerator().terms()) {
    if (e[0] != 0) continue;  // eps power > 0 vanishes
    if (L < 0 || e[1] < L) { L = e[1]; cL = c; }
  }
  if (L < 0) return Rat(0);  // numerator divisible by eps
  const int exponent = (M + 1 - total_mult) + L;
  if (exponent > 0) return Rat(0);
  if (exponent < 0)
    throw std::domain_error("orbit residue: v-limit diverges; limit does not exist");
  Rat out = s.scale() * cL / denom_scale;
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<long> default_multipliers(Family family, int m) {
  std::vector<long> c;
  if (family == Family::quad) {
    for (int i = 1; i <= m; ++i) c.push_back(i);
  } else {
    // u_i = u_{m+i} = i (i < m), u_m = 0, u_2m = m: the balanced subset sums
    // run exactly over {0, 1, ..., m^2}
    c.assign(2 * m, 0);
    for (int i = 1; i <= m - 1; ++i) {
      c[i - 1] = i;
      c[m + i - 1] = i;
    }
    c[m - 1] = 0;
    c[2 * m - 1] = m;
  }
  return c;
}

FactoredFraction orbit_sum(Family family, int m, const std::vector<long>& multipliers) {
  return orbit_sum_with_f(family, m, multipliers, nullptr);
}

Rat kappa_quad(int m) { return kappa_quad(m, default_multipliers(Family::quad, m)); }

Rat kappa_quad(int m, const std::vector<long>& multipliers) {
  if (m < 1 || m > 4) throw std::invalid_argument("kappa_quad: 1 <= m <= 4");
  const auto s = orbit_sum(Family::quad, m, multipliers);
  return extract_limit(s, m * (m + 1) / 2);
}

Rat kappa_zeta(int m) { return kappa_zeta(m, default_multipliers(Family::zeta, m)); }

Rat kappa_zeta(int m, const std::vector<long>& multipliers) {
  if (m < 1 || m > 3) throw std::invalid_argument("kappa_zeta: 1 <= m <= 3");
  const auto s = orbit_sum(Family::zeta, m, multipliers);
  return extract_limit(s, m * m);
}

Rat kappa_limit_with_numerator(Family family, int m, const std::vector<long>& multipliers,
                               const MPoly& f_full) {
  const auto s = orbit_sum_with_f(family, m, multipliers, &f_full);
  const int M = family == Family::quad ? m * (m + 1) / 2 : m * m;
  return extract_limit(s, M);
}

bool set_identity_values(int m, std::vector<long>* values_out) {
  std::vector<long> u(2 * m);
  for (int i = 1; i <= m - 1; ++i) u[i - 1] = u[m + i - 1] = i;
  u[m - 1] = 0;
  u[2 * m - 1] = m;
  std::set<long> values;
  for (unsigned mask = 0; mask < (1u << (2 * m)); ++mask) {
    int top = 0, bottom = 0;
    long val = 0;
    for (int i = 0; i < 2 * m; ++i)
      if (mask & (1u << i)) {
        (i < m ? top : bottom)++;
        val += u[i];
      }
    if (top != bottom) continue;
    values.insert(val);
  }
  if (values_out) values_out->assign(values.begin(), values.end());
  if (static_cast<long>(values.size()) != static_cast<long>(m) * m + 1) return false;
  long expect = 0;
  for (long v : values)
    if (v != expect++) return false;
  return true;
}

// ---------------------------------------------------------------------------
// full multivariate divisibility checks

namespace {

// elementary symmetric polynomial e_k over the variable positions `pos`
MPoly elem_sym(int nvars, const std::vector<int>& pos, int k) {
  std::vector<MPoly> e(k + 1, MPoly(nvars));
  e[0] = MPoly::constant(nvars, Rat(1));
  int seen = 0;
  for (int idx : pos) {
    const MPoly x = MPoly::variable(nvars, idx);
    ++seen;
    for (int j = std::min(k, seen); j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
  }
  return e[k];
}

// symmetric basis of degree exactly d over positions `pos` (d <= 3)
std::vector<MPoly> sym_basis(int nvars, const std::vector<int>& pos, int d) {
  std::vector<MPoly> out;
  const int n = static_cast<int>(pos.size());
  auto e = [&](int k) { return elem_sym(nvars, pos, k); };
  switch (d) {
    case 0: out.push_back(MPoly::constant(nvars, Rat(1))); break;
    case 1: out.push_back(e(1)); break;
    case 2:
      out.push_back(e(1) * e(1));
      if (n >= 2) out.push_back(e(2));
      break;
    case 3:
      out.push_back(e(1) * e(1) * e(1));
      if (n >= 2) out.push_back(e(1) * e(2));
      if (n >= 3) out.push_back(e(3));
      break;
    default: throw std::invalid_argument("sym_basis: degree <= 3 only");
  }
  return out;
}

MPoly flip_signs(const MPoly& p, unsigned mask) {
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int parity = 0;
    for (int i = 0; i < p.nvars(); ++i)
      if ((mask & (1u << i)) && (e[i] & 1)) parity ^= 1;
    out.add_term(e, parity ? -c : c);
  }
  return out;
}

// p composed with the signed permutation image[i] = (source, sign): the new
// polynomial q(u) = p(u') with u'_i = sign_i * u_{source_i}
MPoly apply_signed_perm(const MPoly& p, const std::vector<std::pair<int, int>>& image) {
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    MPoly::Expo e2(p.nvars(), 0);
    int parity = 0;
    for (size_t i = 0; i < image.size(); ++i) {
      e2[image[i].first] += e[i];
      if (image[i].second < 0 && (e[i] & 1)) parity ^= 1;
    }
    // v (and any variable beyond the block) stays in place
    for (int i = static_cast<int>(image.size()); i < p.nvars(); ++i) e2[i] += e[i];
    out.add_term(e2, parity ? -c : c);
  }
  return out;
}

LinearForm unit_pair(int nvars, int i, int j, int sign_j) {
  LinearForm f{std::vector<Rat>(nvars, Rat(0))};
  f.coeffs[i] = 1;
  f.coeffs[j] += Rat(sign_j);
  return f;
}

LinearForm single_var(int nvars, int i, int sign) {
  LinearForm f{std::vector<Rat>(nvars, Rat(0))};
  f.coeffs[i] = sign;
  return f;
}

// v + sum of (mask-selected, sign-flipped) block variables; v is the last var
LinearForm v_form_full(int nvars, unsigned subset, unsigned flips) {
  LinearForm f{std::vector<Rat>(nvars, Rat(0))};
  f.coeffs[nvars - 1] = 1;
  for (int i = 0; i < nvars - 1; ++i)
    if (subset & (1u << i)) f.coeffs[i] = (flips & (1u << i)) ? -1 : 1;
  return f;
}

bool substitution_vanishes(const MPoly& p, int var, const MPoly& value) {
  return p.substitute(var, value).is_zero();
}

}  // namespace

DivisibilityReport divisibility_checks(Family family, int m, int k_max) {
  if (m < 1 || m > 3) throw std::invalid_argument("divisibility_checks: 1 <= m <= 3");
  if (k_max < 0 || k_max > 3) throw std::invalid_argument("divisibility_checks: 0 <= k_max <= 3");
  DivisibilityReport rep;
  const int nblock = family == Family::quad ? m : 2 * m;
  const int nvars = nblock + 1;

  // assemble the f basis: symmetric (quad) or separately block-symmetric (zeta)
  std::vector<std::pair<std::string, MPoly>> fs;
  for (int d = 0; d <= k_max; ++d) {
    if (family == Family::quad) {
      std::vector<int> pos(m);
      for (int i = 0; i < m; ++i) pos[i] = i;
      int idx = 0;
      for (auto& f : sym_basis(nvars, pos, d))
        fs.push_back({"deg" + std::to_string(d) + "#" + std::to_string(idx++), f});
    } else {
      std::vector<int> top(m), bottom(m);
      for (int i = 0; i < m; ++i) { top[i] = i; bottom[i] = m + i; }
      int idx = 0;
      for (int da = 0; da <= d; ++da) {
        const int db = d - da;
        for (auto& fa : sym_basis(nvars, top, da))
          for (auto& fb : sym_basis(nvars, bottom, db))
            fs.push_back({"deg" + std::to_string(d) + "#" + std::to_string(idx++), fa * fb});
      }
    }
  }

  for (const auto& [name, f] : fs) {
    // orbit sum in the full variable ring
    FactoredFraction sum = FactoredFraction::zero(nvars);
    for (unsigned mask = 0; mask < (1u << nblock); ++mask) {
      if (family == Family::zeta && !zeta_mask_balanced(mask, m)) continue;
      FactoredFraction term(nvars);
      // v picks up the flipped variables with their original (unflipped) sign
      term.divide_by_form(v_form_full(nvars, mask, 0u));
      if (family == Family::quad) {
        term.multiply_numerator(flip_signs(f, mask));
        for (int i = 0; i < m; ++i)
          term.divide_by_form(single_var(nvars, i, (mask & (1u << i)) ? -1 : 1));
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            LinearForm p{std::vector<Rat>(nvars, Rat(0))};
            p.coeffs[i] = (mask & (1u << i)) ? -1 : 1;
            p.coeffs[j] = (mask & (1u << j)) ? -1 : 1;
            term.divide_by_form(p);
          }
      } else {
        const auto image = zeta_signed_perm(m, mask);
        term.multiply_numerator(apply_signed_perm(f, image));
        for (int i = 0; i < m; ++i)
          for (int j = m; j < 2 * m; ++j) {
            LinearForm p{std::vector<Rat>(nvars, Rat(0))};
            p.coeffs[image[i].first] += Rat(image[i].second);
            p.coeffs[image[j].first] += Rat(image[j].second);
            term.divide_by_form(p);
          }
      }
      sum = sum + term;
    }

    // multiply through by the prefactor and by the product of all v-forms
    FactoredFraction nstar = sum;
    if (family == Family::quad) {
      for (int i = 0; i < m; ++i) nstar.multiply_by_form(single_var(nvars, i, 1));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          nstar.multiply_by_form(unit_pair(nvars, i, j, -1));
          nstar.multiply_by_form(unit_pair(nvars, i, j, 1));
        }
      for (unsigned subset = 0; subset < (1u << m); ++subset)
        nstar.multiply_by_form(v_form_full(nvars, subset, 0));
    } else {
      for (int i = 0; i < m; ++i)
        for (int j = m; j < 2 * m; ++j) nstar.multiply_by_form(unit_pair(nvars, i, j, 1));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) nstar.multiply_by_form(unit_pair(nvars, i, j, -1));
      for (int i = m; i < 2 * m; ++i)
        for (int j = i + 1; j < 2 * m; ++j) nstar.multiply_by_form(unit_pair(nvars, i, j, -1));
      for (unsigned subset = 0; subset < (1u << (2 * m)); ++subset) {
        if (!zeta_mask_balanced(subset, m)) continue;
        nstar.multiply_by_form(v_form_full(nvars, subset, 0));
      }
    }
    nstar.reduce();
    if (!nstar.denominator().empty()) {
      rep.all_passed = false;
      rep.failures.push_back("f=" + name + ": N* is not polynomial");
      continue;
    }
    const MPoly N = nstar.numerator() * nstar.scale();

    auto check = [&](bool ok, const std::string& what) {
      rep.checked.push_back("f=" + name + ": " + what);
      if (!ok) {
        rep.all_passed = false;
        rep.failures.push_back("f=" + name + ": FAILED " + what);
      }
    };

    if (N.is_zero()) {
      check(true, "N* identically zero (divisibilities trivial)");
      continue;
    }

    const MPoly zero(nvars);
    if (family == Family::quad) {
      for (int i = 0; i < m; ++i)
        check(substitution_vanishes(N, i, zero), "eps_" + std::to_string(i + 1) + " | N*");
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const MPoly xj = MPoly::variable(nvars, j);
          check(substitution_vanishes(N, i, xj),
                "(eps_" + std::to_string(i + 1) + " - eps_" + std::to_string(j + 1) + ") | N*");
          check(substitution_vanishes(N, i, -xj),
                "(eps_" + std::to_string(i + 1) + " + eps_" + std::to_string(j + 1) + ") | N*");
          check(N.swap_vars(i, j) == -N,
                "antisymmetry under eps_" + std::to_string(i + 1) + " <-> eps_" +
                    std::to_string(j + 1));
        }
    } else {
      for (int b = 0; b < 2; ++b)
        for (int i = b * m; i < (b + 1) * m; ++i)
          for (int j = i + 1; j < (b + 1) * m; ++j) {
            const MPoly xj = MPoly::variable(nvars, j);
            check(substitution_vanishes(N, i, xj),
                  "(u_" + std::to_string(i + 1) + " - u_" + std::to_string(j + 1) + ") | N*");
            check(N.swap_vars(i, j) == -N,
                  "antisymmetry under u_" + std::to_string(i + 1) + " <-> u_" +
                      std::to_string(j + 1));
          }
      for (int i = 0; i < m; ++i)
        for (int j = m; j < 2 * m; ++j) {
          const MPoly xj = MPoly::variable(nvars, j);
          check(substitution_vanishes(N, i, -xj),
                "(u_" + std::to_string(i + 1) + " + u_" + std::to_string(j + 1) + ") | N*");
        }
    }
  }
  return rep;
}

}  // namespace mdsmom::residue
