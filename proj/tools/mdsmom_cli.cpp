// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Everything goes through the shared-library C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdsmom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CtxGuard {
  mdsmom_ctx* ctx = mdsmom_ctx_new();
  ~CtxGuard() { mdsmom_ctx_free(ctx); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { mdsmom_string_free(s); }
};

int emit_or_fail(mdsmom_ctx* ctx, char* s, const std::string& out_path) {
  StringGuard g{s};
  if (!s) {
    std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
    return kExitInternal;
  }
  if (out_path.empty()) {
    std::cout << s << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitInternal;
    }
    f << s;
  }
  return kExitOk;
}

// JSON configuration: top-level keys are subcommand names, nested keys are
// long option names. Command-line flags take precedence.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    input >> j;
    std::vector<CLI::ConfigItem> out;
    walk(j, {}, out);
    return out;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }
  static void walk(const nlohmann::json& j, std::vector<std::string> parents,
                   std::vector<CLI::ConfigItem>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) {
        auto p = parents;
        p.push_back(it.key());
        walk(it.value(), p, out);
      } else {
        CLI::ConfigItem item;
        item.parents = parents;
        item.name = it.key();
        if (it.value().is_array())
          for (const auto& v : it.value()) item.inputs.push_back(scalar(v));
        else
          item.inputs.push_back(scalar(it.value()));
        out.push_back(std::move(item));
      }
    }
  }
};

bool parse_complex(const std::string& text, double* re, double* im) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      *re = std::stod(text);
      *im = 0.0;
    } else {
      *re = std::stod(text.substr(0, comma));
      *im = std::stod(text.substr(comma + 1));
    }
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mdsmom: multiple Dirichlet series and moment workbench"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("-o,--output", out_path, "write output to a file instead of stdout");
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; explicit flags override it");

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate zeta | L | chi at a point");
  std::string eval_what = "zeta", eval_s = "2,0";
  long long eval_d = 5;
  bool eval_fast = false;
  eval->add_option("what", eval_what, "zeta | L | chi")->required();
  eval->add_option("--s", eval_s, "point RE,IM")->required();
  eval->add_option("--d", eval_d, "discriminant parameter (L only)");
  eval->add_flag("--fast", eval_fast, "force the AFE path for L");

  // ---- constants ----
  auto* cons = app.add_subcommand("constants", "arithmetic / geometric constants");
  std::string cons_family = "a_quad";
  int cons_m = 3, cons_r = 0;
  long long cons_P = 1000000;
  bool cons_json = false;
  cons->add_option("--family", cons_family,
                   "g | g_quad | g_zeta_orbit | a_zeta | a_quad | r_zeta | r_quad | "
                   "leading_zeta | leading_quad | leading_quad_weighted")
      ->required();
  cons->add_option("--m,--k", cons_m, "family index");
  cons->add_option("--r", cons_r, "r for r_zeta");
  cons->add_option("--P", cons_P, "prime cutoff");
  cons->add_flag("--json", cons_json, "emit full JSON instead of the bare value");

  // ---- group ----
  auto* grp = app.add_subcommand("group", "functional-equation group geometry");
  std::string grp_family = "quad";
  int grp_m = 3;
  bool grp_list = false;
  grp->add_option("--family", grp_family, "quad | zeta")->required();
  grp->add_option("--m", grp_m, "block size m");
  grp->add_flag("--list-hyperplanes", grp_list, "include the polar hyperplanes");

  // ---- residue ----
  auto* res = app.add_subcommand("residue", "exact orbit-residue constants");
  std::string res_family = "quad";
  int res_m = 3;
  res->add_option("--family", res_family, "quad | zeta")->required();
  res->add_option("--m", res_m, "block size m");

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "identity verification suites");
  std::string ver_suite = "quick";
  uint64_t ver_seed = 20250808u;
  bool ver_quick = false;
  ver->add_option("suite", ver_suite,
                  "gfactors | kappa | setid | sieve | d12 | hyperplanes | regions | polepoly | "
                  "lemma34 | prop33 | kernel | exponents | special | all")
      ->required();
  ver->add_option("--seed", ver_seed, "random seed for the randomized parts");
  ver->add_flag("--quick", ver_quick, "trimmed fast variant");

  // ---- enumerate ----
  auto* enu = app.add_subcommand("enumerate", "dump discriminant parameters as CSV");
  double enu_x = 100.0;
  enu->add_option("--x", enu_x, "bound on |d|")->required();

  // ---- moments ----
  auto* mom = app.add_subcommand("moments", "quadratic central-value moment sweep");
  std::string mom_family = "quad";
  std::vector<int> mom_ms = {1};
  std::vector<double> mom_xs = {100000.0};
  std::vector<std::string> mom_csv_arg;
  bool mom_weighted = false, mom_param_cutoff = false, mom_plot = false;
  int mom_threads = 0, mom_fit_degree = -1;
  mom->add_option("--family", mom_family, "quad (zeta lives under zeta-moments)");
  mom->add_option("--m", mom_ms, "moment orders");
  mom->add_option("--x", mom_xs, "cutoffs");
  mom->add_flag("--weighted", mom_weighted, "apply the (1 - |d|/x) weight");
  mom->add_flag("--parameter-cutoff", mom_param_cutoff,
                "cut by |d| of the squarefree parameter instead of the conductor");
  auto* mom_csv_opt =
      mom->add_option("--csv", mom_csv_arg, "emit CSV rows (optionally to a file)")
          ->expected(0, 1);
  mom->add_flag("--plot-data", mom_plot, "emit bare (x, ratio) pairs");
  mom->add_option("--threads", mom_threads, "worker threads (0 = hardware)");
  mom->add_option("--fit-degree", mom_fit_degree, "fit value/x against log-powers");

  // ---- zeta-moments ----
  auto* zmom = app.add_subcommand("zeta-moments", "t-integral moments of |zeta(1/2+it)|^2k");
  int zmom_k = 1;
  double zmom_x = 1000.0;
  zmom->add_option("--k", zmom_k, "half the power")->required();
  zmom->add_option("--x", zmom_x, "upper integration limit")->required();

  // ---- optimize-exponents ----
  app.add_subcommand("optimize-exponents", "error-term equalization for the unweighted bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CtxGuard guard;
  if (!guard.ctx) {
    std::cerr << "error: out of memory\n";
    return kExitInternal;
  }
  mdsmom_ctx* ctx = guard.ctx;

  if (eval->parsed()) {
    double re = 0.0, im = 0.0, or_ = 0.0, oi = 0.0;
    if (!parse_complex(eval_s, &re, &im)) {
      std::cerr << "error: --s expects RE or RE,IM\n";
      return kExitUsage;
    }
    mdsmom_status st = MDSMOM_ERR_INVALID;
    if (eval_what == "zeta") st = mdsmom_eval_zeta(ctx, re, im, &or_, &oi);
    else if (eval_what == "chi") st = mdsmom_eval_chi(ctx, re, im, &or_, &oi);
    else if (eval_what == "L") st = mdsmom_eval_L(ctx, eval_d, re, im, eval_fast ? 1 : 0, &or_, &oi);
    else {
      std::cerr << "error: eval target must be zeta | L | chi\n";
      return kExitUsage;
    }
    if (st != MDSMOM_OK) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return st == MDSMOM_ERR_INTERNAL ? kExitInternal : kExitUsage;
    }
    std::printf("%.17g %+.17g i\n", or_, oi);
    return kExitOk;
  }

  if (cons->parsed()) {
    StringGuard s{mdsmom_constants_json(ctx, cons_family.c_str(), cons_m, cons_r, cons_P)};
    if (!s.s) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    }
    if (cons_json) {
      std::cout << s.s << "\n";
    } else {
      const auto j = nlohmann::ordered_json::parse(s.s);
      if (j["value"].is_string()) std::cout << j["value"].get<std::string>() << "\n";
      else std::cout << j["value"].dump() << "\n";
    }
    return kExitOk;
  }

  if (grp->parsed()) {
    StringGuard s{mdsmom_group_json(ctx, grp_family.c_str(), grp_m)};
    if (!s.s) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    }
    auto j = nlohmann::ordered_json::parse(s.s);
    if (!grp_list) j.erase("polar_hyperplanes");
    if (out_path.empty()) std::cout << j.dump(2) << "\n";
    else std::ofstream(out_path, std::ios::binary) << j.dump(2);
    return kExitOk;
  }

  if (res->parsed()) {
    StringGuard s{mdsmom_residue_json(ctx, res_family.c_str(), res_m)};
    if (!s.s) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    }
    std::cout << s.s << "\n";
    const auto j = nlohmann::ordered_json::parse(s.s);
    return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
  }

  if (ver->parsed()) {
    StringGuard s{mdsmom_verify_json(ctx, ver_suite.c_str(), ver_seed, ver_quick ? 1 : 0)};
    if (!s.s) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    }
    std::cout << s.s << "\n";
    const auto j = nlohmann::ordered_json::parse(s.s);
    return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
  }

  if (enu->parsed()) return emit_or_fail(ctx, mdsmom_enumerate_csv(ctx, enu_x), out_path);

  if (zmom->parsed()) return emit_or_fail(ctx, mdsmom_zeta_moment_json(ctx, zmom_k, zmom_x), out_path);

  if (app.get_subcommand("optimize-exponents")->parsed())
    return emit_or_fail(ctx, mdsmom_optimize_exponents_json(ctx), out_path);

  if (mom->parsed()) {
    if (mom_family != "quad") {
      std::cerr << "error: moments --family must be quad\n";
      return kExitUsage;
    }
    double x_max = 0.0;
    for (double x : mom_xs) x_max = std::max(x_max, x);
    mdsmom_sweep* sweep =
        mdsmom_sweep_new(ctx, x_max, mom_threads, mom_param_cutoff ? 0 : 1);
    if (!sweep) {
      std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
      return kExitUsage;
    }
    std::unique_ptr<mdsmom_sweep, void (*)(mdsmom_sweep*)> sg(sweep, mdsmom_sweep_free);
    if (mom_fit_degree >= 0) {
      return emit_or_fail(ctx,
                          mdsmom_sweep_fit_json(sweep, mom_ms.front(), mom_weighted ? 1 : 0,
                                                mom_fit_degree, mom_xs.data(),
                                                static_cast<int>(mom_xs.size())),
                          out_path);
    }
    if (mom_csv_opt->count() > 0) {
      const std::string path = mom_csv_arg.empty() ? out_path : mom_csv_arg.front();
      return emit_or_fail(ctx,
                          mdsmom_sweep_quad_moment_csv(sweep, mom_ms.data(),
                                                       static_cast<int>(mom_ms.size()),
                                                       mom_xs.data(),
                                                       static_cast<int>(mom_xs.size()),
                                                       mom_weighted ? 1 : 0),
                          path);
    }
    if (mom_plot) {
      std::ostringstream plot;
      plot.precision(17);
      for (int m : mom_ms)
        for (double x : mom_xs) {
          StringGuard s{mdsmom_sweep_quad_moment_json(sweep, m, x, mom_weighted ? 1 : 0)};
          if (!s.s) {
            std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
            return kExitUsage;
          }
          const auto j = nlohmann::ordered_json::parse(s.s);
          plot << j["x"].get<double>() << " " << j["ratio"].get<double>() << "\n";
        }
      if (out_path.empty()) std::cout << plot.str();
      else std::ofstream(out_path, std::ios::binary) << plot.str();
      return kExitOk;
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int m : mom_ms)
      for (double x : mom_xs) {
        StringGuard s{mdsmom_sweep_quad_moment_json(sweep, m, x, mom_weighted ? 1 : 0)};
        if (!s.s) {
          std::cerr << "error: " << mdsmom_ctx_last_error(ctx) << "\n";
          return kExitUsage;
        }
        out.push_back(nlohmann::ordered_json::parse(s.s));
      }
    if (out_path.empty()) std::cout << out.dump(2) << "\n";
    else std::ofstream(out_path, std::ios::binary) << out.dump(2);
    return kExitOk;
  }

  return kExitUsage;
}
