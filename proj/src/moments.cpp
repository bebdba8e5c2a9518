// SPDX-License-Identifier: Apache-2.0
#include "moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "euler.hpp"
#include "special.hpp"

namespace mdsmom::moments {

namespace {

double predicted_quad(int m, double x, bool weighted) {
  const auto fam = weighted ? euler::Family::quad_weighted : euler::Family::quad_unweighted;
  const double c = euler::leading_coeff(fam, static_cast<unsigned>(m), 200000);
  const int M = m * (m + 1) / 2;
  return c * x * std::pow(std::log(x), M);
}

}  // namespace

CentralValueSweep::CentralValueSweep(double x_max, int threads, Cutoff cutoff)
    : x_max_(x_max), cutoff_(cutoff) {
  if (x_max < 3 || x_max > 1.1e7) throw std::invalid_argument("CentralValueSweep: 3 <= x <= 1e7");
  fds_ = cutoff == Cutoff::conductor ? arith::enumerate_by_conductor(x_max)
                                     : arith::enumerate_fundamental(x_max);
  const int64_t n = static_cast<int64_t>(fds_.size());
  values_.assign(n, 0.0);
  measure_.resize(n);
  for (int64_t i = 0; i < n; ++i)
    measure_[i] = static_cast<double>(cutoff == Cutoff::conductor ? fds_[i].conductor
                                                                  : std::abs(fds_[i].d));
  if (threads < 1) threads = 1;
  if (threads > 64) threads = 64;
  std::vector<std::thread> pool;
  std::atomic<int64_t> next_block{0};
  const int64_t block = 2048;
  auto worker = [&]() {
    for (;;) {
      const int64_t b = next_block.fetch_add(1);
      const int64_t lo = b * block;
      if (lo >= n) return;
      const int64_t hi = std::min(n, lo + block);
      for (int64_t i = lo; i < hi; ++i) values_[i] = special::L_central(fds_[i]);
    }
  };
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

MomentRecord CentralValueSweep::quad_moment(int m, double x, bool weighted) const {
  if (m < 1 || m > 4) throw std::invalid_argument("quad_moment: 1 <= m <= 4");
  if (x > x_max_ + 0.5) throw std::invalid_argument("quad_moment: x exceeds sweep range");
  MomentRecord rec;
  rec.family = "quad";
  rec.m_or_k = m;
  rec.x = x;
  rec.weighted = weighted;
  double sum = 0.0, comp = 0.0;
  for (int64_t i = 0; i < size(); ++i) {
    if (measure_[i] > x) break;
    double term = 1.0;
    for (int j = 0; j < m; ++j) term *= values_[i];
    if (weighted) term *= 1.0 - measure_[i] / x;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  rec.value = sum;
  rec.predicted_leading = predicted_quad(m, x, weighted);
  rec.ratio = rec.value / rec.predicted_leading;
  for (const auto& fd : fds_) {
    if (fd.conductor <= x) ++rec.count_conductor;
    if (std::abs(fd.d) <= x) ++rec.count_parameter;
  }
  return rec;
}

double CentralValueSweep::short_interval_second_moment(double x, double theta0) const {
  if (!(theta0 > 0.6 && theta0 <= 1.0))
    throw std::invalid_argument("short_interval_second_moment: 3/5 < theta0 <= 1");
  const double width = std::pow(x, theta0);
  if (width < 1.0) return 0.0;
  const double lo = x - width, hi = x + width;
  if (hi > x_max_ + 0.5) throw std::invalid_argument("short interval exceeds sweep range");
  // d = d0 * q^2 with the measure of d inside the window; value keyed on d0
  double sum = 0.0, comp = 0.0;
  for (int64_t i = 0; i < size(); ++i) {
    const double base = measure_[i];
    if (base > hi) break;
    const double L2 = values_[i] * values_[i];
    for (int64_t q = 1;; ++q) {
      const double dq = base * q * q;
      if (dq > hi) break;
      if (dq <= lo) continue;
      const double y = L2 - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return sum;
}

CentralValueSweep::TauberianCheck CentralValueSweep::tauberian_bridge(int m, double X,
                                                                      double w) const {
  if (w < 1.5) throw std::invalid_argument("tauberian_bridge: w >= 1.5");
  if (X > x_max_ + 0.5) throw std::invalid_argument("tauberian_bridge: X exceeds sweep range");
  TauberianCheck out;
  // S(t) is a step function jumping at the cutoff measures; integrate exactly
  // between consecutive jumps: int t^(-w-1) dt = (a^-w - b^-w)/w
  double s_run = 0.0;
  double lhs = 0.0, comp = 0.0;
  double s_at_X = 0.0;
  for (int64_t i = 0; i <= size(); ++i) {
    const double a = (i == 0) ? 1.0 : std::min(measure_[i - 1], X);
    const double b = (i == size()) ? X : std::min(measure_[i], X);
    if (b > a && s_run != 0.0) {
      const double piece = s_run * (std::pow(a, -w) - std::pow(b, -w)) / w;
      const double y = piece - comp;
      const double t = lhs + y;
      comp = (t - lhs) - y;
      lhs = t;
    }
    if (i == size() || measure_[i] > X) {
      s_at_X = s_run;
      break;
    }
    double term = 1.0;
    for (int j = 0; j < m; ++j) term *= values_[i];
    s_run += term;
  }
  out.lhs = lhs;
  double rhs = 0.0, comp2 = 0.0;
  for (int64_t i = 0; i < size(); ++i) {
    if (measure_[i] > X) break;
    double term = 1.0;
    for (int j = 0; j < m; ++j) term *= values_[i];
    term *= std::pow(measure_[i], -w) / w;
    const double y = term - comp2;
    const double t = rhs + y;
    comp2 = (t - rhs) - y;
    rhs = t;
  }
  out.rhs = rhs;
  out.boundary = std::pow(X, -w) * s_at_X / w;
  out.deviation = std::abs(out.lhs - (out.rhs - out.boundary));
  return out;
}

MomentRecord zeta_moment(int k, double x, double rel_tol) {
  if (k < 1 || k > 3) throw std::invalid_argument("zeta_moment: 1 <= k <= 3");
  if (x <= 0.0 || x > 5000.0) throw std::invalid_argument("zeta_moment: 0 < x <= 5000");
  special::EvalPrecision prec;
  prec.abs_target = 1e-9;
  auto f = [&](double t) {
    const double a = std::abs(special::zeta(std::complex<double>(0.5, t), prec));
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= a * a;
    return std::complex<double>(v, 0.0);
  };
  // |zeta(1/2+it)| fluctuates on the scale of the zero spacing ~ 2pi/log t
  auto freq = [](double t) { return std::log(2.0 + t) + 1.0; };
  const auto q = special::integrate_panels(f, 0.0, x, freq, rel_tol * x);
  MomentRecord rec;
  rec.family = "zeta";
  rec.m_or_k = k;
  rec.x = x;
  rec.value = q.value.real();
  rec.predicted_leading = euler::leading_coeff(euler::Family::zeta, static_cast<unsigned>(k), 200000) *
                          x * std::pow(std::log(x), k * k);
  rec.ratio = rec.value / rec.predicted_leading;
  return rec;
}

FitResult fit_log_poly(const std::vector<double>& xs, const std::vector<double>& values,
                       int degree) {
  const int n = static_cast<int>(xs.size());
  if (degree < 0 || n != static_cast<int>(values.size()))
    throw std::invalid_argument("fit_log_poly: bad inputs");
  FitResult out;
  out.degree = degree;
  if (n < degree + 2) {
    out.ill_conditioned = true;
    return out;
  }

  // centered/scaled log variable keeps the normal equations well conditioned
  std::vector<double> u(n);
  double umin = 1e300, umax = -1e300;
  for (int i = 0; i < n; ++i) {
    u[i] = std::log(xs[i]);
    umin = std::min(umin, u[i]);
    umax = std::max(umax, u[i]);
  }
  if (umax - umin < 1e-9) {
    out.ill_conditioned = true;
    return out;
  }
  const double mid = 0.5 * (umin + umax), half = 0.5 * (umax - umin);

  auto fit_subset = [&](const std::vector<int>& idx) -> std::vector<double> {
    const int d = degree;
    const int nn = static_cast<int>(idx.size());
    // least squares in the scaled variable z = (u - mid)/half via normal
    // equations with exact-ish Gaussian elimination (d <= 6, well scaled)
    std::vector<std::vector<double>> ata(d + 1, std::vector<double>(d + 2, 0.0));
    for (int r = 0; r < nn; ++r) {
      const int i = idx[r];
      const double z = (u[i] - mid) / half;
      std::vector<double> row(d + 1);
      double p = 1.0;
      for (int j = 0; j <= d; ++j) { row[j] = p; p *= z; }
      const double y = values[i] / xs[i];
      for (int a = 0; a <= d; ++a) {
        for (int b = 0; b <= d; ++b) ata[a][b] += row[a] * row[b];
        ata[a][d + 1] += row[a] * y;
      }
    }
    for (int col = 0; col <= d; ++col) {
      int piv = col;
      for (int r = col; r <= d; ++r)
        if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
      std::swap(ata[piv], ata[col]);
      if (std::abs(ata[col][col]) < 1e-13) return {};
      for (int r = 0; r <= d; ++r) {
        if (r == col) continue;
        const double f = ata[r][col] / ata[col][col];
        for (int cc = col; cc <= d + 1; ++cc) ata[r][cc] -= f * ata[col][cc];
      }
    }
    std::vector<double> cz(d + 1);
    for (int j = 0; j <= d; ++j) cz[j] = ata[j][d + 1] / ata[j][j];
    // convert from z-powers back to powers of log x: z = (t - mid)/half
    std::vector<double> ct(d + 1, 0.0);  // coefficients of t^j
    for (int j = 0; j <= d; ++j) {
      // cz[j] * ((t - mid)/half)^j
      std::vector<double> binpow(j + 1, 0.0);
      binpow[0] = 1.0;
      for (int rep = 0; rep < j; ++rep) {
        std::vector<double> nxt(j + 1, 0.0);
        for (int a = 0; a <= rep; ++a) {
          nxt[a + 1] += binpow[a] / half;
          nxt[a] += binpow[a] * (-mid / half);
        }
        binpow = nxt;
      }
      for (int a = 0; a <= j; ++a) ct[a] += cz[j] * binpow[a];
    }
    return ct;
  };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const auto full = fit_subset(all);
  if (full.empty()) {
    out.ill_conditioned = true;
    return out;
  }
  out.coefficients.assign(full.rbegin(), full.rend());

  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    double pred = 0.0, p = 1.0;
    for (int j = 0; j <= degree; ++j) { pred += full[j] * p; p *= u[i]; }
    const double r = values[i] / xs[i] - pred;
    rss += r * r;
  }
  out.residual_norm = std::sqrt(rss);

  // jackknife spread of the top coefficient
  if (n >= degree + 3) {
    std::vector<double> tops;
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (i != skip) idx.push_back(i);
      const auto c = fit_subset(idx);
      if (!c.empty()) tops.push_back(c[degree]);
    }
    double lo = 1e300, hi = -1e300;
    for (double t : tops) { lo = std::min(lo, t); hi = std::max(hi, t); }
    out.top_uncertainty = hi - lo;
  }
  const double top = out.coefficients.empty() ? 0.0 : out.coefficients.front();
  if (top != 0.0 && out.top_uncertainty > 0.5 * std::abs(top)) out.ill_conditioned = true;
  return out;
}

std::string records_to_csv(const std::vector<MomentRecord>& records) {
  std::ostringstream os;
  os << "family,m,x,weighted,value,predicted,ratio\n";
  os.precision(17);
  for (const auto& r : records)
    os << r.family << "," << r.m_or_k << "," << r.x << "," << (r.weighted ? 1 : 0) << ","
       << r.value << "," << r.predicted_leading << "," << r.ratio << "\n";
  return os.str();
}

}  // namespace mdsmom::moments
