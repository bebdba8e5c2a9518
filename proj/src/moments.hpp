// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace mdsmom::moments {

enum class Cutoff {
  conductor,  // |fundamental discriminant| <= x (used against the predictions)
  parameter   // |d| <= x for the squarefree parameter d
};

struct MomentRecord {
  std::string family;  // "quad" or "zeta"
  int m_or_k = 0;
  double x = 0.0;
  bool weighted = false;
  double value = 0.0;
  double predicted_leading = 0.0;
  double ratio = 0.0;
  int64_t count_conductor = 0;  // discriminants with conductor <= x
  int64_t count_parameter = 0;  // parameters with |d| <= x
};

// Central L-values over a discriminant family, computed once and reused by
// every moment variant. Thread-parallel fill with a thread-count-independent
// result (values are per-discriminant; reductions are serial in fixed order).
class CentralValueSweep {
 public:
  CentralValueSweep(double x_max, int threads, Cutoff cutoff = Cutoff::conductor);

  double x_max() const { return x_max_; }
  Cutoff cutoff() const { return cutoff_; }
  int64_t size() const { return static_cast<int64_t>(fds_.size()); }
  const std::vector<arith::FundamentalDiscriminant>& discriminants() const { return fds_; }
  const std::vector<double>& values() const { return values_; }

  // sum of L(1/2,chi_d)^m over cutoff measure <= x, optionally (1 - X_d/x)-weighted
  MomentRecord quad_moment(int m, double x, bool weighted) const;

  // sum over ||d|_cutoff - x| < x^theta0 of L(1/2, chi_{d0})^2 with d = d0 m^2
  double short_interval_second_moment(double x, double theta0) const;

  struct TauberianCheck {
    double lhs = 0.0;       // int_1^X S(t) t^(-w-1) dt, stepwise-exact
    double rhs = 0.0;       // (1/w) sum L^m |d|^-w  (no boundary correction)
    double boundary = 0.0;  // X^-w S(X) / w
    double deviation = 0.0; // |lhs - (rhs - boundary)|
  };
  TauberianCheck tauberian_bridge(int m, double X, double w) const;

 private:
  double x_max_;
  Cutoff cutoff_;
  std::vector<arith::FundamentalDiscriminant> fds_;  // sorted by cutoff measure
  std::vector<double> values_;
  std::vector<double> measure_;  // cutoff measure per entry (monotone)
};

// int_0^x |zeta(1/2+it)|^(2k) dt by adaptive panel quadrature.
MomentRecord zeta_moment(int k, double x, double rel_tol = 1e-4);

struct FitResult {
  int degree = 0;
  std::vector<double> coefficients;  // highest power of log x first
  double top_uncertainty = 0.0;      // jackknife spread of the leading coefficient
  double residual_norm = 0.0;
  bool ill_conditioned = false;
};

// Least-squares fit of value/x against powers of log x (orthogonalized in a
// centered variable). Requires >= degree+2 points.
FitResult fit_log_poly(const std::vector<double>& xs, const std::vector<double>& values,
                       int degree);

std::string records_to_csv(const std::vector<MomentRecord>& records);

}  // namespace mdsmom::moments
