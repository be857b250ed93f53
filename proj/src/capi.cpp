#include "liecurve/liecurve.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "report.hpp"
#include "version.hpp"

using namespace liecurve;

struct lc_curve {
  SampledCurve curve;
  std::optional<FrenetData> reference;  // prescribed data from synthesis
};

struct lc_analysis {
  Analysis analysis;
};

struct lc_derived {
  DeriveRun run;
};

namespace {

thread_local std::string t_last_error;

lc_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return LC_ERR_IO;
    case ErrorCode::Parse: return LC_ERR_PARSE;
    case ErrorCode::InsufficientSamples: return LC_ERR_INSUFFICIENT_SAMPLES;
    case ErrorCode::NonUnitSpeed: return LC_ERR_NON_UNIT_SPEED;
    case ErrorCode::GeodesicDegeneracy: return LC_ERR_GEODESIC_DEGENERACY;
    case ErrorCode::IrregularCurve: return LC_ERR_IRREGULAR_CURVE;
    case ErrorCode::ConstantH: return LC_ERR_CONSTANT_H;
    case ErrorCode::NotSlantHelix: return LC_ERR_NOT_SLANT_HELIX;
    case ErrorCode::VanishingH: return LC_ERR_VANISHING_H;
    case ErrorCode::CuspInRange: return LC_ERR_CUSP_IN_RANGE;
    case ErrorCode::DomainExceedsSingularity: return LC_ERR_DOMAIN_SINGULARITY;
  }
  return LC_ERR_INTERNAL;
}

template <typename F>
lc_status guarded(F&& fn) {
  try {
    fn();
    t_last_error.clear();
    return LC_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LC_ERR_INTERNAL;
  }
}

GroupSpec spec_of(lc_group group) {
  switch (group) {
    case LC_GROUP_ABELIAN: return GroupSpec::abelian();
    case LC_GROUP_SO3: return GroupSpec::so3();
    case LC_GROUP_SU2: return GroupSpec::su2();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown group id");
}

lc_group group_id(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Abelian: return LC_GROUP_ABELIAN;
    case GroupKind::SO3: return LC_GROUP_SO3;
    case GroupKind::SU2: return LC_GROUP_SU2;
  }
  return LC_GROUP_ABELIAN;
}

AnalysisOptions make_options(const lc_analysis_options* options) {
  AnalysisOptions opt;
  if (options) {
    if (options->fd_order != 2 && options->fd_order != 4)
      throw Error(ErrorCode::InvalidArgument, "fd_order must be 2 or 4");
    if (!(options->tol_rel_std > 0.0))
      throw Error(ErrorCode::InvalidArgument, "tol_rel_std must be positive");
    opt.frenet.fd_order = options->fd_order;
    opt.tol.rel_std = options->tol_rel_std;
  }
  return opt;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* lc_version(void) { return kVersion; }

const char* lc_status_name(lc_status status) {
  switch (status) {
    case LC_OK: return "ok";
    case LC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LC_ERR_IO: return "io_error";
    case LC_ERR_PARSE: return "parse_error";
    case LC_ERR_INSUFFICIENT_SAMPLES: return "insufficient_samples";
    case LC_ERR_NON_UNIT_SPEED: return "non_unit_speed";
    case LC_ERR_GEODESIC_DEGENERACY: return "geodesic_degeneracy";
    case LC_ERR_IRREGULAR_CURVE: return "irregular_curve";
    case LC_ERR_CONSTANT_H: return "constant_h";
    case LC_ERR_NOT_SLANT_HELIX: return "not_slant_helix";
    case LC_ERR_VANISHING_H: return "vanishing_h";
    case LC_ERR_CUSP_IN_RANGE: return "cusp_in_range";
    case LC_ERR_DOMAIN_SINGULARITY: return "domain_singularity";
    case LC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* lc_last_error(void) { return t_last_error.c_str(); }

lc_status lc_curve_read_csv(lc_group group, const char* path, lc_curve** out) {
  return guarded([&] {
    require(path && out, "path and out must not be null");
    auto handle = std::make_unique<lc_curve>();
    handle->curve = read_curve_csv(spec_of(group), path);
    *out = handle.release();
  });
}

lc_status lc_curve_write_csv(const lc_curve* curve, const char* path) {
  return guarded([&] {
    require(curve && path, "curve and path must not be null");
    write_curve_csv(curve->curve, path);
  });
}

size_t lc_curve_samples(const lc_curve* curve) {
  return curve ? static_cast<size_t>(curve->curve.size()) : 0;
}

lc_group lc_curve_group(const lc_curve* curve) {
  return curve ? group_id(curve->curve.group) : LC_GROUP_ABELIAN;
}

void lc_curve_free(lc_curve* curve) { delete curve; }

void lc_synthesis_params_init(lc_synthesis_params* params) {
  if (!params) return;
  params->profile = LC_PROFILE_SLANT;
  params->kappa0 = 1.0;
  params->tau0 = 0.0;
  params->slope = 0.0;
  params->sigma = 1.0;
  params->s0 = -0.85;
  params->s1 = 0.85;
  params->step = 1e-3;
}

lc_status lc_synthesize(lc_group group, const lc_synthesis_params* params,
                        lc_curve** out) {
  return guarded([&] {
    require(params && out, "params and out must not be null");
    const GroupSpec g = spec_of(group);
    Profile profile;
    switch (params->profile) {
      case LC_PROFILE_GEODESIC:
        profile = constant_profile(0.0, g.tau_g(), params->s0, params->s1,
                                   params->step);
        break;
      case LC_PROFILE_CIRCULAR:
        require(params->kappa0 > 0.0, "circular profile needs kappa0 > 0");
        profile = constant_profile(params->kappa0, params->tau0, params->s0,
                                   params->s1, params->step);
        break;
      case LC_PROFILE_GENERAL: {
        require(params->kappa0 > 0.0, "general profile needs kappa0 > 0");
        const double k0 = params->kappa0;
        profile = general_helix_profile(
            g, params->slope, [k0](double) { return k0; }, params->s0,
            params->s1, params->step);
        break;
      }
      case LC_PROFILE_SLANT:
        profile = slant_helix_profile(g, params->sigma, params->kappa0,
                                      params->s0, params->s1, params->step);
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown profile kind");
    }
    SynthesisResult res = integrate_frenet(g, profile);
    auto handle = std::make_unique<lc_curve>();
    handle->curve = std::move(res.curve);
    handle->reference = std::move(res.fd);
    *out = handle.release();
  });
}

lc_status lc_curve_roundtrip_error(const lc_curve* curve, int fd_order,
                                   double* max_dkappa, double* max_dtau) {
  return guarded([&] {
    require(curve && max_dkappa && max_dtau, "null argument");
    require(curve->reference.has_value(),
            "round-trip check needs a synthesized curve");
    AnalysisOptions opt;
    if (fd_order) {
      require(fd_order == 2 || fd_order == 4, "fd_order must be 2 or 4");
      opt.frenet.fd_order = fd_order;
    }
    const Analysis a = analyze_curve(curve->curve, opt);
    const FrenetData& ref = *curve->reference;
    require(a.fd.size() == ref.size(), "reference grid mismatch");
    const long n = a.fd.size();
    const long drop = static_cast<long>(std::floor(0.05 * double(n)));
    double dk = 0.0, dt = 0.0;
    for (long i = drop; i < n - drop; ++i) {
      dk = std::max(dk, std::abs(a.fd.kappa[i] - ref.kappa[i]));
      dt = std::max(dt, std::abs(a.fd.tau[i] - ref.tau[i]));
    }
    *max_dkappa = dk;
    *max_dtau = dt;
  });
}

void lc_analysis_options_init(lc_analysis_options* options) {
  if (!options) return;
  options->tol_rel_std = 1e-3;
  options->fd_order = 4;
}

lc_status lc_analyze(const lc_curve* curve, const lc_analysis_options* options,
                     lc_analysis** out) {
  return guarded([&] {
    require(curve && out, "curve and out must not be null");
    auto handle = std::make_unique<lc_analysis>();
    handle->analysis = analyze_curve(curve->curve, make_options(options));
    *out = handle.release();
  });
}

lc_classification lc_analysis_classification(const lc_analysis* analysis) {
  if (!analysis) return LC_CLASS_GENERIC;
  switch (analysis->analysis.report.classification) {
    case CurveClass::Geodesic: return LC_CLASS_GEODESIC;
    case CurveClass::CircularHelix: return LC_CLASS_CIRCULAR_HELIX;
    case CurveClass::GeneralHelix: return LC_CLASS_GENERAL_HELIX;
    case CurveClass::SlantHelix: return LC_CLASS_SLANT_HELIX;
    case CurveClass::Generic: return LC_CLASS_GENERIC;
  }
  return LC_CLASS_GENERIC;
}

size_t lc_analysis_samples(const lc_analysis* analysis) {
  return analysis ? static_cast<size_t>(analysis->analysis.fd.size()) : 0;
}

double lc_analysis_theta(const lc_analysis* analysis) {
  if (!analysis ||
      analysis->analysis.report.classification != CurveClass::SlantHelix)
    return std::numeric_limits<double>::quiet_NaN();
  return analysis->analysis.report.theta;
}

lc_status lc_analysis_axis(const lc_analysis* analysis, double out[3]) {
  return guarded([&] {
    require(analysis && out, "null argument");
    const auto& axis = analysis->analysis.report.axis;
    if (!axis)
      throw Error(ErrorCode::NotSlantHelix,
                  "axis is defined only for general and slant helices");
    out[0] = axis->x();
    out[1] = axis->y();
    out[2] = axis->z();
  });
}

lc_status lc_analysis_profile(const lc_analysis* analysis,
                              lc_quantity quantity, double* buf, size_t cap,
                              size_t* len) {
  return guarded([&] {
    require(analysis && len, "analysis and len must not be null");
    const Analysis& a = analysis->analysis;
    std::vector<double> tmp;
    const std::vector<double>* src = nullptr;
    switch (quantity) {
      case LC_QUANTITY_S: src = &a.fd.s; break;
      case LC_QUANTITY_KAPPA: src = &a.fd.kappa; break;
      case LC_QUANTITY_TAU: src = &a.fd.tau; break;
      case LC_QUANTITY_TAU_G:
        tmp.assign(a.fd.size(), a.fd.tau_g);
        src = &tmp;
        break;
      case LC_QUANTITY_H: src = &a.report.H; break;
      case LC_QUANTITY_H_PRIME: src = &a.report.Hprime; break;
      case LC_QUANTITY_SIGMA_N: {
        tmp = a.report.sigma.value;
        for (size_t i = 0; i < tmp.size(); ++i)
          if (!a.report.sigma.valid.empty() && !a.report.sigma.valid[i])
            tmp[i] = std::numeric_limits<double>::quiet_NaN();
        src = &tmp;
        break;
      }
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown quantity");
    }
    *len = src->size();
    if (buf) {
      require(cap >= src->size(), "buffer too small");
      std::memcpy(buf, src->data(), src->size() * sizeof(double));
    }
  });
}

lc_status lc_analysis_write_report(const lc_analysis* analysis,
                                   const char* path) {
  return guarded([&] {
    require(analysis && path, "null argument");
    write_text_atomic(path, render_analysis_report(analysis->analysis));
  });
}

lc_status lc_analysis_write_plot(const lc_analysis* analysis,
                                 const char* path) {
  return guarded([&] {
    require(analysis && path, "null argument");
    write_text_atomic(path, render_analysis_plot_csv(analysis->analysis));
  });
}

lc_status lc_analysis_report_text(const lc_analysis* analysis, char** out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    const std::string text = render_analysis_report(analysis->analysis);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw Error(ErrorCode::Io, "allocation failed");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void lc_analysis_free(lc_analysis* analysis) { delete analysis; }

void lc_string_free(char* text) { std::free(text); }

lc_status lc_derive(const lc_curve* curve, const lc_analysis_options* options,
                    lc_derived_kind kind, double involute_c,
                    lc_derived** out) {
  return guarded([&] {
    require(curve && out, "curve and out must not be null");
    const AnalysisOptions opt = make_options(options);
    DerivedOptions dopt;
    dopt.frenet = opt.frenet;
    dopt.tol = opt.tol;

    const FrenetData fd = frenet_apparatus(curve->curve, opt.frenet);

    auto handle = std::make_unique<lc_derived>();
    handle->run.group = curve->curve.group;
    handle->run.options = opt;
    handle->run.involute_c = involute_c;
    switch (kind) {
      case LC_DERIVED_TANGENT:
        handle->run.kind = DerivedKind::Tangent;
        handle->run.results.push_back(tangent_indicatrix(fd, dopt));
        break;
      case LC_DERIVED_NORMAL:
        handle->run.kind = DerivedKind::Normal;
        handle->run.results.push_back(normal_indicatrix(fd, dopt));
        break;
      case LC_DERIVED_BINORMAL:
        handle->run.kind = DerivedKind::Binormal;
        handle->run.results = binormal_indicatrix(fd, dopt);
        break;
      case LC_DERIVED_INVOLUTE:
        handle->run.kind = DerivedKind::Involute;
        handle->run.results.push_back(
            involute(curve->curve, fd, involute_c, dopt));
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown derived kind");
    }
    *out = handle.release();
  });
}

size_t lc_derived_result_count(const lc_derived* derived) {
  return derived ? derived->run.results.size() : 0;
}

lc_status lc_derived_write_report(const lc_derived* derived,
                                  const char* path) {
  return guarded([&] {
    require(derived && path, "null argument");
    write_text_atomic(path, render_derived_report(derived->run));
  });
}

lc_status lc_derived_write_plot(const lc_derived* derived, const char* path) {
  return guarded([&] {
    require(derived && path, "null argument");
    write_text_atomic(path, render_derived_plot_csv(derived->run));
  });
}

lc_status lc_derived_write_curve_csv(const lc_derived* derived, size_t index,
                                     const char* path) {
  return guarded([&] {
    require(derived && path, "null argument");
    require(index < derived->run.results.size(), "result index out of range");
    const DerivedCurveResult& r = derived->run.results[index];
    if (r.literal_curve)
      write_algebra_curve_csv(*r.literal_curve, path);
    else if (r.kind == DerivedKind::Involute)
      write_algebra_curve_csv(
          r.curve, path, "frame-level tangent samples of the involute");
    else
      write_algebra_curve_csv(r.curve, path);
  });
}

lc_status lc_derived_write_embedding_csv(const lc_derived* derived,
                                         const char* path) {
  return guarded([&] {
    require(derived && path, "null argument");
    const DerivedCurveResult* target = nullptr;
    for (const auto& r : derived->run.results)
      if (!r.embedding.empty()) target = &r;
    if (!target)
      throw Error(ErrorCode::InvalidArgument,
                  "no ambient embedding (only non-abelian involutes have one)");

    std::string out =
        "# non-intrinsic ambient embedding, for visualization only\n";
    const bool so3 = derived->run.group.kind == GroupKind::SO3;
    out += so3 ? "s,m11,m12,m13,m21,m22,m23,m31,m32,m33\n" : "s,qw,qx,qy,qz\n";
    for (size_t i = 0; i < target->embedding.size(); ++i) {
      out += format_number(target->curve.s(static_cast<long>(i)));
      for (double c : target->embedding[i]) {
        out += ',';
        out += format_number(c);
      }
      out += '\n';
    }
    write_text_atomic(path, out);
  });
}

void lc_derived_free(lc_derived* derived) { delete derived; }

}  // extern "C"
