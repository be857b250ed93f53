// liecurve command line tool: analyze / synthesize / derive workflows over
// curve CSV files. Links the shared library through its C API only.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "liecurve/liecurve.h"

namespace {

int fail(lc_status status) {
  std::fprintf(stderr, "error: %s: %s\n", lc_status_name(status),
               lc_last_error());
  return 1;
}

lc_group parse_group(const std::string& name) {
  if (name == "abelian") return LC_GROUP_ABELIAN;
  if (name == "so3") return LC_GROUP_SO3;
  if (name == "su2") return LC_GROUP_SU2;
  std::fprintf(stderr, "error: unknown group '%s'\n", name.c_str());
  std::exit(1);
}

const char* class_name(lc_classification c) {
  switch (c) {
    case LC_CLASS_GEODESIC: return "Geodesic";
    case LC_CLASS_CIRCULAR_HELIX: return "CircularHelix";
    case LC_CLASS_GENERAL_HELIX: return "GeneralHelix";
    case LC_CLASS_SLANT_HELIX: return "SlantHelix";
    case LC_CLASS_GENERIC: return "Generic";
  }
  return "?";
}

double default_tol() {
  if (const char* env = std::getenv("LIECURVE_TOL_CONST")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    std::fprintf(stderr, "warning: ignoring invalid LIECURVE_TOL_CONST\n");
  }
  return 1e-3;
}

struct CurveGuard {
  lc_curve* ptr = nullptr;
  ~CurveGuard() { lc_curve_free(ptr); }
};
struct AnalysisGuard {
  lc_analysis* ptr = nullptr;
  ~AnalysisGuard() { lc_analysis_free(ptr); }
};
struct DerivedGuard {
  lc_derived* ptr = nullptr;
  ~DerivedGuard() { lc_derived_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curve analysis in the three 3-d Lie groups with bi-invariant "
               "metrics (abelian, so3, su2)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lc_version()));

  std::string group_name, input, output, plot_path, curve_out, embed_out;
  std::string profile = "slant";
  double tol_const = default_tol();
  int fd_order = 4;
  bool strict = false, verify = false;
  double kappa0 = 1.0, tau0 = 0.5, slope = 0.0, sigma = 1.0;
  double s0 = -0.85, s1 = 0.85, step = 1e-3;
  std::string kind = "tangent";
  double involute_c = 10.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_name, "abelian, so3 or su2")->required();
    cmd->add_option("--tol-const", tol_const,
                    "constancy tolerance (rel std); env LIECURVE_TOL_CONST "
                    "overrides the default");
    cmd->add_option("--fd-order", fd_order, "finite difference order (2 or 4)")
        ->check(CLI::IsMember({2, 4}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a curve CSV");
  add_common(analyze);
  analyze->add_option("--input", input, "curve CSV path")->required();
  analyze->add_option("--output", output, "report path (JSON)")->required();
  analyze->add_option("--plot", plot_path, "long-format CSV for plotting");
  analyze->add_flag("--strict", strict,
                    "exit 2 on a degenerate (Geodesic) classification");

  CLI::App* synthesize =
      app.add_subcommand("synthesize", "integrate a curve from a profile");
  add_common(synthesize);
  synthesize->add_option("--profile", profile,
                         "geodesic, circular, general or slant")
      ->check(CLI::IsMember({"geodesic", "circular", "general", "slant"}));
  synthesize->add_option("--kappa", kappa0, "constant curvature");
  synthesize->add_option("--tau", tau0, "constant torsion (circular)");
  synthesize->add_option("--slope", slope, "general helix slope c");
  synthesize->add_option("--sigma", sigma, "slant helix constant sigma_N");
  synthesize->add_option("--s0", s0, "domain start");
  synthesize->add_option("--s1", s1, "domain end");
  synthesize->add_option("--step", step, "grid step (at most 1e-2)");
  synthesize->add_option("--output", output, "curve CSV path")->required();
  synthesize->add_flag("--verify", verify,
                       "re-analyze the output and print the round-trip error");

  CLI::App* derive =
      app.add_subcommand("derive", "indicatrices and involutes of a curve");
  add_common(derive);
  derive->add_option("--input", input, "curve CSV path")->required();
  derive->add_option("--kind", kind, "tangent, normal, binormal or involute")
      ->check(CLI::IsMember({"tangent", "normal", "binormal", "involute"}));
  derive->add_option("--c", involute_c, "involute offset constant");
  derive->add_option("--output", output, "report path (JSON)")->required();
  derive->add_option("--curve-output", curve_out,
                     "derived curve CSV (first window)");
  derive->add_option("--embedding-output", embed_out,
                     "ambient embedding CSV (non-abelian involute only)");
  derive->add_option("--plot", plot_path, "long-format CSV for plotting");

  CLI11_PARSE(app, argc, argv);

  lc_analysis_options options;
  lc_analysis_options_init(&options);
  options.tol_rel_std = tol_const;
  options.fd_order = fd_order;

  if (analyze->parsed()) {
    const lc_group group = parse_group(group_name);
    CurveGuard curve;
    lc_status st = lc_curve_read_csv(group, input.c_str(), &curve.ptr);
    if (st != LC_OK) return fail(st);
    AnalysisGuard analysis;
    st = lc_analyze(curve.ptr, &options, &analysis.ptr);
    if (st != LC_OK) return fail(st);
    st = lc_analysis_write_report(analysis.ptr, output.c_str());
    if (st != LC_OK) return fail(st);
    if (!plot_path.empty()) {
      st = lc_analysis_write_plot(analysis.ptr, plot_path.c_str());
      if (st != LC_OK) return fail(st);
    }
    const lc_classification cls = lc_analysis_classification(analysis.ptr);
    std::printf("classification: %s\n", class_name(cls));
    if (strict && cls == LC_CLASS_GEODESIC) return 2;
    return 0;
  }

  if (synthesize->parsed()) {
    const lc_group group = parse_group(group_name);
    lc_synthesis_params params;
    lc_synthesis_params_init(&params);
    if (profile == "geodesic") params.profile = LC_PROFILE_GEODESIC;
    if (profile == "circular") params.profile = LC_PROFILE_CIRCULAR;
    if (profile == "general") params.profile = LC_PROFILE_GENERAL;
    if (profile == "slant") params.profile = LC_PROFILE_SLANT;
    params.kappa0 = kappa0;
    params.tau0 = tau0;
    params.slope = slope;
    params.sigma = sigma;
    params.s0 = s0;
    params.s1 = s1;
    params.step = step;

    CurveGuard curve;
    lc_status st = lc_synthesize(group, &params, &curve.ptr);
    if (st != LC_OK) return fail(st);
    st = lc_curve_write_csv(curve.ptr, output.c_str());
    if (st != LC_OK) return fail(st);
    std::printf("samples: %zu\n", lc_curve_samples(curve.ptr));
    if (verify && params.profile != LC_PROFILE_GEODESIC) {
      double dk = 0.0, dt = 0.0;
      st = lc_curve_roundtrip_error(curve.ptr, fd_order, &dk, &dt);
      if (st != LC_OK) return fail(st);
      std::printf("roundtrip_max_dkappa: %.6e\nroundtrip_max_dtau: %.6e\n", dk,
                  dt);
    }
    return 0;
  }

  if (derive->parsed()) {
    const lc_group group = parse_group(group_name);
    lc_derived_kind dk = LC_DERIVED_TANGENT;
    if (kind == "normal") dk = LC_DERIVED_NORMAL;
    if (kind == "binormal") dk = LC_DERIVED_BINORMAL;
    if (kind == "involute") dk = LC_DERIVED_INVOLUTE;

    CurveGuard curve;
    lc_status st = lc_curve_read_csv(group, input.c_str(), &curve.ptr);
    if (st != LC_OK) return fail(st);
    DerivedGuard derived;
    st = lc_derive(curve.ptr, &options, dk, involute_c, &derived.ptr);
    if (st != LC_OK) return fail(st);
    st = lc_derived_write_report(derived.ptr, output.c_str());
    if (st != LC_OK) return fail(st);
    if (!curve_out.empty()) {
      st = lc_derived_write_curve_csv(derived.ptr, 0, curve_out.c_str());
      if (st != LC_OK) return fail(st);
    }
    if (!embed_out.empty()) {
      st = lc_derived_write_embedding_csv(derived.ptr, embed_out.c_str());
      if (st != LC_OK) return fail(st);
    }
    if (!plot_path.empty()) {
      st = lc_derived_write_plot(derived.ptr, plot_path.c_str());
      if (st != LC_OK) return fail(st);
    }
    std::printf("windows: %zu\n", lc_derived_result_count(derived.ptr));
    return 0;
  }

  return 0;
}
