// SPDX-License-Identifier: Apache-2.0
#include "mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mdsmom::poly {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_[Expo(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars);
  Expo e(nvars, 0);
  e.at(index) = 1;
  p.terms_[e] = Rat(1);
  return p;
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("MPoly::constant_value: not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

bool MPoly::is_homogeneous(int* degree_out) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    if (d < 0) d = t;
    else if (t != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly p(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      p.add_term(e, c1 * c2);
    }
  return p;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly p(nvars_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
  return p;
}

MPoly MPoly::substitute(int index, const MPoly& value) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(nvars_, c);
    Expo rest = e;
    const int k = rest[index];
    rest[index] = 0;
    MPoly mono(nvars_);
    mono.terms_[rest] = Rat(1);
    term = term * mono;
    for (int i = 0; i < k; ++i) term = term * value;
    out = out + term;
  }
  return out;
}

MPoly MPoly::swap_vars(int i, int j) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Expo e2 = e;
    std::swap(e2[i], e2[j]);
    out.add_term(e2, c);
  }
  return out;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

MPoly LinearForm::to_poly() const {
  MPoly p(static_cast<int>(coeffs.size()));
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
    if (coeffs[i] == 0) continue;
    MPoly::Expo e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Rat LinearForm::evaluate(const std::vector<Rat>& point) const {
  Rat s(0);
  for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * point[i];
  s.canonicalize();
  return s;
}

Rat LinearForm::normalize() {
  Rat s = primitive_scale(coeffs);
  for (const Rat& c : coeffs)
    if (c != 0) {
      if (c < 0) s = -s;
      break;
    }
  if (s == 0) return Rat(0);
  for (Rat& c : coeffs) {
    c /= s;
    c.canonicalize();
  }
  return s;
}

FactoredFraction FactoredFraction::zero(int nvars) {
  FactoredFraction f(nvars);
  f.num_ = MPoly(nvars);
  return f;
}

void FactoredFraction::divide_by_form(LinearForm f) {
  const Rat s = f.normalize();
  if (s == 0) throw std::domain_error("FactoredFraction: division by zero form");
  scale_ /= s;
  scale_.canonicalize();
  ++den_[f];
}

void FactoredFraction::multiply_by_form(LinearForm f) {
  const Rat s = f.normalize();
  if (s == 0) {
    num_ = MPoly(nvars_);
    return;
  }
  scale_ *= s;
  scale_.canonicalize();
  auto it = den_.find(f);
  if (it != den_.end()) {
    if (--it->second == 0) den_.erase(it);
  } else {
    num_ = num_ * f.to_poly();
  }
}

MPoly FactoredFraction::numerator_on_denominator(const std::map<LinearForm, int>& target) const {
  MPoly out = num_;
  for (const auto& [f, mult] : target) {
    auto it = den_.find(f);
    const int have = it == den_.end() ? 0 : it->second;
    if (have > mult) throw std::logic_error("numerator_on_denominator: denominator does not divide target");
    const MPoly fp = f.to_poly();
    for (int i = 0; i < mult - have; ++i) out = out * fp;
  }
  for (const auto& [f, mult] : den_)
    if (target.find(f) == target.end() || target.at(f) < mult)
      throw std::logic_error("numerator_on_denominator: denominator does not divide target");
  return out;
}

FactoredFraction FactoredFraction::operator+(const FactoredFraction& o) const {
  if (nvars_ != o.nvars_) throw std::logic_error("FactoredFraction: nvars mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // lcm of the two factored denominators
  std::map<LinearForm, int> lcm = den_;
  for (const auto& [f, m] : o.den_) {
    auto it = lcm.find(f);
    if (it == lcm.end()) lcm[f] = m;
    else it->second = std::max(it->second, m);
  }
  const MPoly n1 = numerator_on_denominator(lcm) * scale_;
  const MPoly n2 = o.numerator_on_denominator(lcm) * o.scale_;
  FactoredFraction out(nvars_);
  out.num_ = n1 + n2;
  out.den_ = std::move(lcm);
  out.scale_ = Rat(1);
  if (out.num_.is_zero()) out.den_.clear();
  out.reduce();
  return out;
}

void FactoredFraction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    scale_ = Rat(1);
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    MPoly q(nvars_);
    bool any = false;
    while (it->second > 0 && divide_by_linear(num_, it->first, &q)) {
      num_ = q;
      --it->second;
      any = true;
    }
    if (it->second == 0) it = den_.erase(it);
    else ++it;
    (void)any;
  }
  // pull the numerator content into the scale
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : num_.terms()) coeffs.push_back(c);
  Rat content = primitive_scale(coeffs);
  if (!coeffs.empty() && content != 0 && content != 1) {
    num_ = num_ * (Rat(1) / content);
    scale_ *= content;
    scale_.canonicalize();
  }
}

bool divide_by_linear(const MPoly& p, const LinearForm& f, MPoly* quotient) {
  const int n = p.nvars();
  // pivot: first variable with nonzero coefficient in f
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (f.coeffs[i] != 0) { pivot = i; break; }
  if (pivot < 0) return false;
  const Rat c = f.coeffs[pivot];

  // synthetic division along the pivot variable: write p = sum_j a_j x^j,
  // f = c x - g  with  g = -(f - c x). Horner from the top degree.
  int maxdeg = 0;
  for (const auto& [e, k] : p.terms()) maxdeg = std::max(maxdeg, e[pivot]);
  std::vector<MPoly> a(maxdeg + 1, MPoly(n));
  for (const auto& [e, k] : p.terms()) {
    MPoly::Expo rest = e;
    const int j = rest[pivot];
    rest[pivot] = 0;
    a[j].add_term(rest, k);
  }
  MPoly g(n);
  for (int i = 0; i < n; ++i) {
    if (i == pivot || f.coeffs[i] == 0) continue;
    MPoly::Expo e(n, 0);
    e[i] = 1;
    g.add_term(e, -f.coeffs[i]);
  }
  const Rat inv_c = Rat(1) / c;
  std::vector<MPoly> q(std::max(maxdeg, 1), MPoly(n));
  MPoly carry(n);
  for (int j = maxdeg; j >= 1; --j) {
    const MPoly top = a[j] + carry;
    q[j - 1] = top * inv_c;
    carry = q[j - 1] * g;
  }
  const MPoly rem = a[0] + carry;
  if (!rem.is_zero()) return false;
  if (quotient) {
    MPoly out(n);
    for (int j = 0; j < static_cast<int>(q.size()); ++j) {
      MPoly xj = MPoly::constant(n, Rat(1));
      MPoly::Expo e(n, 0);
      e[pivot] = j;
      MPoly mono(n);
      mono.add_term(e, Rat(1));
      out = out + q[j] * mono;
    }
    *quotient = out;
  }
  return true;
}

}  // namespace mdsmom::poly
