#pragma once

#include <functional>

#include "curves.hpp"

namespace liecurve {

/// Prescribed curvature/torsion profiles over a uniform grid.
struct Profile {
  std::function<double(double)> kappa;
  std::function<double(double)> tau;
  double s0 = 0.0;
  double s1 = 1.0;
  double h = 1e-3;

  long steps() const;
  long samples() const { return steps() + 1; }
};

struct FrameState {
  Vec3 T = Vec3::UnitX();
  Vec3 N = Vec3::UnitY();
  Vec3 B = Vec3::UnitZ();
};

struct SynthesisResult {
  SampledCurve curve;
  FrenetData fd;  // the exact frames and profiles used by the integrator
};

/// Integrates the left-invariant frame system
///   Tdot = kappa N, Ndot = -kappa T + (tau - tau_g) B, Bdot = -(tau - tau_g) N
/// with classical RK4 on the frame components (substepped to the Gauss nodes)
/// and advances the group point with a fourth-order two-exponential
/// commutator-free step. The frame is re-orthonormalized every step.
SynthesisResult integrate_frenet(const GroupSpec& g, const Profile& profile,
                                 const GroupElement& start,
                                 const FrameState& frame0);
SynthesisResult integrate_frenet(const GroupSpec& g, const Profile& profile);

/// Closed-form slant-helix family: kappa = kappa0 and
/// H(s) = (kappa0 s / m) / sqrt(1 - (kappa0 s / m)^2), tau = tau_g + kappa0 H,
/// so the analyzed sigma_N is the constant m. The domain must stay inside
/// (-|m|/kappa0, |m|/kappa0) with a 5% margin.
Profile slant_helix_profile(const GroupSpec& g, double m, double kappa0,
                            double s0, double s1, double h);

/// General helix family: tau = slope * kappa + tau_g.
Profile general_helix_profile(const GroupSpec& g, double slope,
                              std::function<double(double)> kappa, double s0,
                              double s1, double h);

Profile constant_profile(double kappa0, double tau0, double s0, double s1,
                         double h);

}  // namespace liecurve
