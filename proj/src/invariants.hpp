#pragma once

#include <optional>
#include <span>
#include <vector>

#include "curves.hpp"

namespace liecurve {

struct ConstancyTolerances {
  double rel_std = 1e-3;           // constancy = rel std below this
  double interior_fraction = 0.90; // stats window (endpoint stencils are noisier)
  double hprime_min = 1e-6;        // sigma_N mask where |H'| is below this
  double kappa_min = 1e-6;
};

enum class CurveClass { Geodesic, CircularHelix, GeneralHelix, SlantHelix, Generic };
const char* curve_class_name(CurveClass c);

struct ProfileStats {
  double mean = 0.0;
  double rel_std = 0.0;
  double min = 0.0;
  double max = 0.0;
  long count = 0;           // samples entering the statistics
  double masked_fraction = 0.0;
  bool defined = false;
};

struct HarmonicCurvature {
  std::vector<double> H;
  std::vector<double> Hprime;  // empty when the grid is not uniform
};

/// H = (tau - tau_g) / kappa, with H' by finite differences on uniform grids.
HarmonicCurvature harmonic_curvature(const FrenetData& fd,
                                     double kappa_min = 1e-6);

struct MaskedProfile {
  std::vector<double> value;
  std::vector<char> valid;
  long valid_count() const;
};

/// sigma_N = kappa (1 + H^2)^(3/2) / H', masked where |H'| <= hprime_min.
/// Throws ConstantH when the mask leaves no samples (general helix case).
MaskedProfile sigma_n_profile(const FrenetData& fd, std::span<const double> H,
                              std::span<const double> Hprime,
                              double hprime_min = 1e-6);

/// Group-specialized closed form: (kappa^2 + (tau - tau_g)^2)^(3/2) over
/// kappa^2 * d/ds[(tau - tau_g)/kappa], with tau_g = 0, 1, 1/2 for the
/// Abelian, SU(2) and SO(3) groups. Agrees with sigma_n_profile pointwise.
MaskedProfile special_sigma(const GroupSpec& g, std::span<const double> kappa,
                            std::span<const double> tau, double h,
                            int fd_order = 4, double hprime_min = 1e-6);

struct InvariantReport {
  CurveClass classification = CurveClass::Generic;
  std::vector<double> H;
  std::vector<double> Hprime;
  MaskedProfile sigma;
  ProfileStats kappa_stats, tau_stats, H_stats, sigma_stats;
  double general_slope = 0.0;   // defined iff GeneralHelix
  double theta = 0.0;           // defined iff SlantHelix
  std::optional<Vec3> axis;     // present iff GeneralHelix or SlantHelix
  double axis_max_dev = 0.0;
  double mean_n_dot_axis = 0.0;
  long window_lo = 0, window_hi = 0;
  ConstancyTolerances tol;
};

/// Classification with precedence Geodesic > CircularHelix > GeneralHelix >
/// SlantHelix > Generic. A slant verdict additionally requires at least half
/// of the window to survive the H' mask.
InvariantReport classify(const FrenetData& fd,
                         const ConstancyTolerances& tol = {});

struct AxisResult {
  std::vector<Vec3> samples;        // per-sample axis at unmasked window samples
  Vec3 mean = Vec3::Zero();         // normalized mean axis
  double max_dev = 0.0;             // max ||X_i - raw mean|| over the window
  std::vector<double> n_dot_axis;   // <N_i, mean> over the window
  double cos_theta = 0.0;
};

/// Slant-helix axis X = {kappa H (1+H^2)/H' T + N + kappa (1+H^2)/H' B} cos(theta)
/// with cos(theta) = 1/sqrt(1 + sigma^2).
AxisResult slant_axis(const FrenetData& fd, std::span<const double> H,
                      std::span<const double> Hprime, double sigma,
                      const ConstancyTolerances& tol = {});

/// Checked variant of the axis computation: requires a SlantHelix verdict.
/// Throws NotSlantHelix otherwise.
AxisResult axis(const FrenetData& fd, const InvariantReport& report);

/// Statistics helper shared with the report writer: rel std over a window
/// with an optional validity mask and a scale floor for near-zero means.
ProfileStats profile_stats(std::span<const double> values,
                           std::span<const char> valid, long lo, long hi,
                           double scale_floor);

}  // namespace liecurve
