// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "rational.hpp"

namespace mdsmom::poly {

// Exact multivariate polynomial over Q with a fixed variable count.
// Terms are exponent-vector -> coefficient; zero coefficients never stored.
class MPoly {
 public:
  using Expo = std::vector<int>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0)); }
  Rat constant_value() const;  // requires is_constant()

  const std::map<Expo, Rat>& terms() const { return terms_; }
  void add_term(const Expo& e, const Rat& c);

  int total_degree() const;
  bool is_homogeneous(int* degree_out = nullptr) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Substitute variable `index` by a polynomial (in the same variable space).
  MPoly substitute(int index, const MPoly& value) const;

  // Swap two variables.
  MPoly swap_vars(int i, int j) const;

  // Evaluate at a rational point.
  Rat evaluate(const std::vector<Rat>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

// Homogeneous linear form sum_i c_i x_i, kept in a primitive-integer
// normal form: content 1, first nonzero coefficient positive into `coeffs`,
// with the extracted rational factor reported separately on normalization.
struct LinearForm {
  std::vector<Rat> coeffs;

  bool operator<(const LinearForm& o) const { return coeffs < o.coeffs; }
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }

  MPoly to_poly() const;
  Rat evaluate(const std::vector<Rat>& point) const;

  // Normalizes in place; returns s such that (original form) = s * (normalized).
  Rat normalize();
};

// Exact rational function  scale * num / prod_f f^mult  with the denominator
// kept as a multiset of normalized linear forms. Supports the orbit-sum
// algebra: sums of reciprocals of products of linear forms.
class FactoredFraction {
 public:
  explicit FactoredFraction(int nvars = 0)
      : scale_(1), num_(MPoly::constant(nvars, Rat(1))), nvars_(nvars) {}

  static FactoredFraction zero(int nvars);

  int nvars() const { return nvars_; }
  const Rat& scale() const { return scale_; }
  const MPoly& numerator() const { return num_; }
  const std::map<LinearForm, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  void multiply_scalar(const Rat& c) { scale_ *= c; scale_.canonicalize(); }
  void multiply_numerator(const MPoly& p) { num_ = num_ * p; }
  // Multiply denominator by a (not necessarily normalized) linear form.
  void divide_by_form(LinearForm f);
  // Multiply numerator by a linear form (cancels against the denominator).
  void multiply_by_form(LinearForm f);

  FactoredFraction operator+(const FactoredFraction& o) const;

  // Cancel denominator factors that exactly divide the numerator.
  void reduce();

  // numerator * prod(extra denominators of `target` not present here);
  // requires den_ to divide `target` (else throws).
  MPoly numerator_on_denominator(const std::map<LinearForm, int>& target) const;

 private:
  Rat scale_;
  MPoly num_;
  std::map<LinearForm, int> den_;
  int nvars_;
};

// Exact division of p by a linear form; returns true and sets quotient if the
// remainder is zero.
bool divide_by_linear(const MPoly& p, const LinearForm& f, MPoly* quotient);

}  // namespace mdsmom::poly
