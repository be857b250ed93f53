#pragma once

#include <string>

#include "derived.hpp"
#include "frenet.hpp"
#include "invariants.hpp"
#include "synthesis.hpp"

namespace liecurve {

struct AnalysisOptions {
  FrenetOptions frenet;
  ConstancyTolerances tol;
};

/// Full analysis of one curve. For a pure geodesic (curvature below
/// kappa_min everywhere) the frames are undefined; only the curvature
/// profile and the Geodesic tag are populated.
struct Analysis {
  GroupSpec group;
  double s0 = 0.0;
  double h = 0.0;
  long samples = 0;
  bool frames_defined = false;
  FrenetData fd;
  InvariantReport report;
  AnalysisOptions options;
};

Analysis analyze_curve(const SampledCurve& curve,
                       const AnalysisOptions& opt = {});

// --- curve files ---------------------------------------------------------

/// Columns per group: s,x,y,z | s,qw,qx,qy,qz | s,r11..r33 (row-major).
/// '#' comment lines are allowed; s must be strictly increasing. Non-uniform
/// grids are resampled onto a uniform grid before analysis.
SampledCurve read_curve_csv(const GroupSpec& g, const std::string& path);
std::string render_curve_csv(const SampledCurve& curve);
void write_curve_csv(const SampledCurve& curve, const std::string& path);

std::string render_algebra_curve_csv(const AlgebraCurve& curve,
                                     const std::string& comment = "");
void write_algebra_curve_csv(const AlgebraCurve& curve,
                             const std::string& path,
                             const std::string& comment = "");

// --- reports -------------------------------------------------------------

std::string render_analysis_report(const Analysis& analysis);
std::string render_analysis_plot_csv(const Analysis& analysis);

struct DeriveRun {
  GroupSpec group;
  DerivedKind kind = DerivedKind::Tangent;
  AnalysisOptions options;
  double involute_c = 0.0;
  std::vector<DerivedCurveResult> results;
};

std::string render_derived_report(const DeriveRun& run);
std::string render_derived_plot_csv(const DeriveRun& run);

/// Whole-file atomic write (temp file + rename).
void write_text_atomic(const std::string& path, const std::string& content);

/// Locale-independent shortest representation at 12 significant digits
/// (report display values).
std::string format_number(double v);
double round12(double v);

/// Shortest representation that round-trips to the exact double. Curve files
/// use this so that reading a written file reproduces the curve bit for bit;
/// coarser quantization would feed artificial noise into the higher
/// finite-difference stages of the analysis.
std::string format_number_exact(double v);

}  // namespace liecurve
