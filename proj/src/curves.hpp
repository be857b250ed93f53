#pragma once

#include <vector>

#include "groups.hpp"

namespace liecurve {

/// Arc-length sampled curve in a group. The grid is exactly uniform:
/// s_i = s0 + i * h.
struct SampledCurve {
  GroupSpec group;
  double s0 = 0.0;
  double h = 0.0;
  std::vector<GroupElement> points;

  long size() const { return static_cast<long>(points.size()); }
  double s(long i) const { return s0 + static_cast<double>(i) * h; }
  std::vector<double> grid() const;
};

/// Uniformly sampled curve with values in the algebra (indicatrices, and
/// literal point curves of the abelian group). The group tag is carried for
/// the bracket correction of the torsion.
struct AlgebraCurve {
  GroupSpec group;
  double s0 = 0.0;
  double h = 0.0;
  std::vector<Vec3> points;

  long size() const { return static_cast<long>(points.size()); }
  double s(long i) const { return s0 + static_cast<double>(i) * h; }
  std::vector<double> grid() const;
};

/// Per-sample Frenet apparatus. The frame triples are orthonormal and
/// right-handed (B = T x N) to machine precision, so the group torsion
/// tau_g = (1/2) <[T,N], B> evaluates to c/2 identically.
struct FrenetData {
  GroupSpec group;
  std::vector<double> s;  // uniform for analysis output; psi-grid for involutes
  std::vector<Vec3> T, N, B;
  std::vector<double> kappa, tau;
  double tau_g = 0.0;
  int fd_order = 4;
  double max_unit_speed_dev = 0.0;

  long size() const { return static_cast<long>(s.size()); }
  double grid_step() const { return size() > 1 ? s[1] - s[0] : 0.0; }
};

/// Snap a strictly increasing grid to an exact uniform grid, or report that
/// it is not uniform. Deviations up to 1e-6 * h are absorbed (file round
/// trips land well inside that).
bool fit_uniform_grid(const std::vector<double>& s, double* s0, double* h);

/// Resample a curve with a non-uniform grid onto the uniform grid fitted
/// through its endpoints (componentwise cubic splines in the ambient
/// coordinates, re-projected onto the group).
SampledCurve resample_uniform(const GroupSpec& g, const std::vector<double>& s,
                              const std::vector<GroupElement>& points);

}  // namespace liecurve
