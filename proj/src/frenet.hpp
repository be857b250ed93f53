#pragma once

#include <span>

#include "curves.hpp"

namespace liecurve {

struct FrenetOptions {
  int fd_order = 4;
  double kappa_min = 1e-6;      // below this the normal is undefined
  double unit_speed_tol = 1e-4;
  double speed_min = 1e-6;      // regularity floor for algebra curves
};

/// Frenet apparatus of an arc-length curve in the group. T comes from
/// body_velocity, kappa = |Tdot| with componentwise finite differences,
/// N = Tdot/kappa, B = T x N, tau = <Ndot, B> + tau_g.
/// Throws InsufficientSamples, NonUnitSpeed, GeodesicDegeneracy.
FrenetData frenet_apparatus(const SampledCurve& curve,
                            const FrenetOptions& opt = {});

/// Vector-space Frenet apparatus of an algebra-valued curve, with the
/// bracket-corrected torsion tau = <Ndot, B> + tau_g of the stored group.
/// Non-unit-speed inputs are reparametrized to arc length first.
FrenetData frenet_of_algebra_curve(const AlgebraCurve& curve,
                                   const FrenetOptions& opt = {});

struct ReparamResult {
  AlgebraCurve curve;         // uniform arc-length grid, starting at 0
  std::vector<double> arc;    // arc length at the input samples
  std::vector<double> speed;  // measured |dP/ds| at the input samples
};

/// Cumulative-trapezoid arc length followed by cubic resampling onto a
/// uniform grid with the same sample count.
ReparamResult reparametrize_to_arclength_map(const AlgebraCurve& curve,
                                             const FrenetOptions& opt = {});
AlgebraCurve reparametrize_to_arclength(const AlgebraCurve& curve,
                                        const FrenetOptions& opt = {});

/// Frenet apparatus of a derived curve given only its unit tangent samples
/// on the source grid and the prescribed arc rate ds*/ds > 0 (chain rule;
/// used for the frame-level involute). The result grid is the accumulated
/// derived arc length (non-uniform in general).
FrenetData frenet_along_rate(const GroupSpec& g, double h,
                             std::span<const Vec3> tangent,
                             std::span<const double> rate,
                             const FrenetOptions& opt = {});

}  // namespace liecurve
