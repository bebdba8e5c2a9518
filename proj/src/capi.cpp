// SPDX-License-Identifier: Apache-2.0
#include "../include/mdsmom.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "arith.hpp"
#include "dseries.hpp"
#include "euler.hpp"
#include "affine.hpp"
#include "moments.hpp"
#include "residue.hpp"
#include "special.hpp"
#include "verify.hpp"

using json = nlohmann::ordered_json;

struct mdsmom_ctx {
  std::string last_error;
};

struct mdsmom_sweep {
  mdsmom_ctx* ctx = nullptr;
  std::unique_ptr<mdsmom::moments::CentralValueSweep> sweep;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mdsmom_status classify(const std::exception& e, mdsmom_ctx* ctx) {
  if (ctx) ctx->last_error = e.what();
  if (dynamic_cast<const std::invalid_argument*>(&e)) return MDSMOM_ERR_INVALID;
  if (dynamic_cast<const std::domain_error*>(&e)) return MDSMOM_ERR_DOMAIN;
  return MDSMOM_ERR_INTERNAL;
}

template <typename F>
mdsmom_status guarded(mdsmom_ctx* ctx, F&& f) {
  if (!ctx) return MDSMOM_ERR_INVALID;
  try {
    f();
    return MDSMOM_OK;
  } catch (const std::exception& e) {
    return classify(e, ctx);
  } catch (...) {
    ctx->last_error = "unknown error";
    return MDSMOM_ERR_INTERNAL;
  }
}

template <typename F>
char* guarded_string(mdsmom_ctx* ctx, F&& f) {
  if (!ctx) return nullptr;
  try {
    return dup_string(f());
  } catch (const std::exception& e) {
    classify(e, ctx);
    return nullptr;
  } catch (...) {
    ctx->last_error = "unknown error";
    return nullptr;
  }
}

json record_json(const mdsmom::moments::MomentRecord& r) {
  json j;
  j["family"] = r.family;
  j["m"] = r.m_or_k;
  j["x"] = r.x;
  j["weighted"] = r.weighted;
  j["value"] = r.value;
  j["predicted"] = r.predicted_leading;
  j["ratio"] = r.ratio;
  j["count_conductor"] = r.count_conductor;
  j["count_parameter"] = r.count_parameter;
  return j;
}

}  // namespace

extern "C" {

mdsmom_ctx* mdsmom_ctx_new(void) { return new (std::nothrow) mdsmom_ctx; }

void mdsmom_ctx_free(mdsmom_ctx* ctx) { delete ctx; }

const char* mdsmom_ctx_last_error(const mdsmom_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void mdsmom_string_free(char* s) { ::free(s); }

mdsmom_status mdsmom_eval_zeta(mdsmom_ctx* ctx, double re, double im, double* out_re,
                               double* out_im) {
  return guarded(ctx, [&] {
    const auto z = mdsmom::special::zeta({re, im});
    *out_re = z.real();
    *out_im = z.imag();
  });
}

mdsmom_status mdsmom_eval_chi(mdsmom_ctx* ctx, double re, double im, double* out_re,
                              double* out_im) {
  return guarded(ctx, [&] {
    const auto z = mdsmom::special::chi_factor({re, im});
    *out_re = z.real();
    *out_im = z.imag();
  });
}

mdsmom_status mdsmom_eval_L(mdsmom_ctx* ctx, long long d, double re, double im, int fast,
                            double* out_re, double* out_im) {
  return guarded(ctx, [&] {
    const auto fd = mdsmom::arith::FundamentalDiscriminant::from_d(d);
    const auto z = fast ? mdsmom::special::L_fast(fd, {re, im})
                        : mdsmom::special::L_value(fd, {re, im});
    *out_re = z.real();
    *out_im = z.imag();
  });
}

mdsmom_status mdsmom_kronecker(mdsmom_ctx* ctx, long long d, long long n, int* out) {
  return guarded(ctx, [&] { *out = mdsmom::arith::kronecker(d, n); });
}

char* mdsmom_constants_json(mdsmom_ctx* ctx, const char* family, int m, int r,
                            long long prime_cutoff) {
  return guarded_string(ctx, [&]() -> std::string {
    using namespace mdsmom;
    const std::string fam = family ? family : "";
    json j;
    j["family"] = fam;
    j["m"] = m;
    if (fam == "g") {
      j["value"] = euler::g_zeta_int(m).get_str();
    } else if (fam == "g_quad") {
      j["value"] = euler::g_quad(m).get_str();
    } else if (fam == "g_zeta_orbit") {
      j["value"] = euler::g_zeta_orbit(m).get_str();
    } else if (fam == "a_zeta" || fam == "a_quad" || fam == "r_zeta" || fam == "r_quad") {
      euler::ProductValue pv;
      if (fam == "a_zeta") pv = euler::a_zeta(m, prime_cutoff);
      else if (fam == "a_quad") pv = euler::a_quad(m, prime_cutoff);
      else if (fam == "r_zeta") pv = euler::r_center_zeta(m, r, prime_cutoff);
      else pv = euler::r_center_quad(m, prime_cutoff);
      if (fam == "r_zeta") j["r"] = r;
      j["value"] = pv.value;
      j["tail_bound"] = pv.tail_bound;
      j["P"] = pv.prime_cutoff;
    } else if (fam == "leading_zeta") {
      j["value"] = euler::leading_coeff(euler::Family::zeta, m, prime_cutoff);
      j["P"] = prime_cutoff;
    } else if (fam == "leading_quad") {
      j["value"] = euler::leading_coeff(euler::Family::quad_unweighted, m, prime_cutoff);
      j["P"] = prime_cutoff;
    } else if (fam == "leading_quad_weighted") {
      j["value"] = euler::leading_coeff(euler::Family::quad_weighted, m, prime_cutoff);
      j["P"] = prime_cutoff;
    } else {
      throw std::invalid_argument("unknown constants family: " + fam);
    }
    return j.dump(2);
  });
}

char* mdsmom_group_json(mdsmom_ctx* ctx, const char* family, int m) {
  return guarded_string(ctx, [&]() -> std::string {
    using namespace mdsmom;
    const std::string fam = family ? family : "";
    json j;
    j["family"] = fam;
    j["m"] = m;
    std::vector<feg::GroupElement> group;
    int n_s = 0;
    if (fam == "quad") {
      if (m < 1 || m > 6) throw std::invalid_argument("group: 1 <= m <= 6");
      group = feg::quad_group(m);
      n_s = m;
    } else if (fam == "zeta") {
      if (m < 1 || m > 4) throw std::invalid_argument("group: 1 <= m <= 4");
      std::vector<int> signs(2 * m, 1);
      for (int i = m; i < 2 * m; ++i) signs[i] = -1;
      group = feg::zeta_group(m, signs);
      n_s = 2 * m;
      j["stabilizer_order"] = feg::stabilizer_subgroup(signs).elements.size();
    } else {
      throw std::invalid_argument("unknown group family: " + fam);
    }
    j["group_order"] = group.size();
    const auto orbit = feg::polar_orbit(group, feg::w_equals_one(n_s));
    j["polar_hyperplanes"] = json::array();
    for (const auto& h : orbit) {
      json row;
      row["normal"] = json::array();
      for (const auto& c : h.normal) row["normal"].push_back(c.get_str());
      row["offset"] = h.offset.get_str();
      j["polar_hyperplanes"].push_back(row);
    }
    return j.dump(2);
  });
}

char* mdsmom_residue_json(mdsmom_ctx* ctx, const char* family, int m) {
  return guarded_string(ctx, [&]() -> std::string {
    using namespace mdsmom;
    const std::string fam = family ? family : "";
    json j;
    j["family"] = fam;
    j["m"] = m;
    if (fam == "quad") {
      const Rat k = residue::kappa_quad(m);
      const Rat closed = Rat(1 << m) * euler::g_quad(m) * Rat(factorial(m * (m + 1) / 2));
      j["kappa"] = k.get_str();
      j["closed_form"] = closed.get_str();
      j["closed_form_expr"] = "2^m * g_m * M!";
      j["pass"] = (k == closed);
    } else if (fam == "zeta") {
      const Rat k = residue::kappa_zeta(m);
      const Rat closed = euler::g_zeta_orbit(m) * Rat(factorial(m * m));
      j["kappa"] = k.get_str();
      j["closed_form"] = closed.get_str();
      j["closed_form_expr"] = "g_2m * (m^2)!";
      j["pass"] = (k == closed);
    } else {
      throw std::invalid_argument("unknown residue family: " + fam);
    }
    return j.dump(2);
  });
}

char* mdsmom_verify_json(mdsmom_ctx* ctx, const char* suite, uint64_t seed, int quick) {
  return guarded_string(ctx, [&]() -> std::string {
    return mdsmom::verify::run_suite(suite ? suite : "quick", seed, quick != 0).dump(2);
  });
}

char* mdsmom_enumerate_csv(mdsmom_ctx* ctx, double x) {
  return guarded_string(ctx, [&]() -> std::string {
    std::ostringstream os;
    os << "d,D,sign,a\n";
    for (const auto& fd : mdsmom::arith::enumerate_fundamental(x))
      os << fd.d << "," << fd.conductor << "," << fd.sign << "," << fd.parity << "\n";
    return os.str();
  });
}

char* mdsmom_optimize_exponents_json(mdsmom_ctx* ctx) {
  return guarded_string(ctx, [&]() -> std::string {
    const auto sol = mdsmom::dseries::optimize_exponents();
    const auto bis = mdsmom::dseries::optimize_exponents_bisection();
    json j;
    j["theta"] = sol.theta;
    j["theta0_threshold"] = sol.theta0_threshold;
    j["gamma"] = sol.gamma;
    j["alpha"] = sol.alpha;
    j["beta_lower"] = sol.beta_lower;
    j["theta_bisection"] = bis.theta;
    j["theta0_threshold_bisection"] = bis.theta0_threshold;
    return j.dump(2);
  });
}

char* mdsmom_zeta_moment_json(mdsmom_ctx* ctx, int k, double x) {
  return guarded_string(ctx, [&]() -> std::string {
    return record_json(mdsmom::moments::zeta_moment(k, x)).dump(2);
  });
}

mdsmom_sweep* mdsmom_sweep_new(mdsmom_ctx* ctx, double x_max, int threads,
                               int cutoff_by_conductor) {
  if (!ctx) return nullptr;
  try {
    auto* s = new mdsmom_sweep;
    s->ctx = ctx;
    s->sweep = std::make_unique<mdsmom::moments::CentralValueSweep>(
        x_max, threads,
        cutoff_by_conductor ? mdsmom::moments::Cutoff::conductor
                            : mdsmom::moments::Cutoff::parameter);
    return s;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return nullptr;
  }
}

void mdsmom_sweep_free(mdsmom_sweep* sweep) { delete sweep; }

char* mdsmom_sweep_quad_moment_json(mdsmom_sweep* sweep, int m, double x, int weighted) {
  if (!sweep) return nullptr;
  return guarded_string(sweep->ctx, [&]() -> std::string {
    return record_json(sweep->sweep->quad_moment(m, x, weighted != 0)).dump(2);
  });
}

char* mdsmom_sweep_quad_moment_csv(mdsmom_sweep* sweep, const int* ms, int n_ms,
                                   const double* xs, int n_xs, int weighted) {
  if (!sweep) return nullptr;
  return guarded_string(sweep->ctx, [&]() -> std::string {
    std::vector<mdsmom::moments::MomentRecord> recs;
    for (int i = 0; i < n_ms; ++i)
      for (int j = 0; j < n_xs; ++j)
        recs.push_back(sweep->sweep->quad_moment(ms[i], xs[j], weighted != 0));
    return mdsmom::moments::records_to_csv(recs);
  });
}

char* mdsmom_sweep_fit_json(mdsmom_sweep* sweep, int m, int weighted, int degree,
                            const double* xs, int n_xs) {
  if (!sweep) return nullptr;
  return guarded_string(sweep->ctx, [&]() -> std::string {
    std::vector<double> grid(xs, xs + n_xs), vals;
    for (double x : grid) vals.push_back(sweep->sweep->quad_moment(m, x, weighted != 0).value);
    const auto fit = mdsmom::moments::fit_log_poly(grid, vals, degree);
    if (fit.ill_conditioned) throw std::domain_error("fit is ill-conditioned on this grid");
    json j;
    j["m"] = m;
    j["weighted"] = weighted != 0;
    j["degree"] = fit.degree;
    j["coefficients"] = fit.coefficients;
    j["top_uncertainty"] = fit.top_uncertainty;
    j["residual_norm"] = fit.residual_norm;
    return j.dump(2);
  });
}

char* mdsmom_sweep_short_interval_json(mdsmom_sweep* sweep, double x, double theta0) {
  if (!sweep) return nullptr;
  return guarded_string(sweep->ctx, [&]() -> std::string {
    const double v = sweep->sweep->short_interval_second_moment(x, theta0);
    json j;
    j["x"] = x;
    j["theta0"] = theta0;
    j["value"] = v;
    j["ratio_to_x_theta0"] = v / std::pow(x, theta0);
    return j.dump(2);
  });
}

char* mdsmom_sweep_tauberian_json(mdsmom_sweep* sweep, int m, double X, double w) {
  if (!sweep) return nullptr;
  return guarded_string(sweep->ctx, [&]() -> std::string {
    const auto c = sweep->sweep->tauberian_bridge(m, X, w);
    json j;
    j["m"] = m;
    j["X"] = X;
    j["w"] = w;
    j["lhs_integral"] = c.lhs;
    j["rhs_sum"] = c.rhs;
    j["boundary_term"] = c.boundary;
    j["deviation"] = c.deviation;
    return j.dump(2);
  });
}

}  // extern "C"
