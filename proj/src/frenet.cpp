#include "frenet.hpp"

#include <cmath>
#include <limits>

#include "fd.hpp"
#include "spline.hpp"

namespace liecurve {

namespace {

long interior_margin(int fd_order) { return fd_order == 4 ? 2 : 1; }

struct FrameProfiles {
  std::vector<Vec3> T, N, B;
  std::vector<double> kappa, tau_tilde;
};

/// Shared frame construction from (approximately unit) tangent samples.
/// `rate` rescales the parameter derivative to the derived arc length; pass
/// an empty span when the grid already is arc length.
FrameProfiles frame_from_tangents(std::span<const Vec3> t_raw, double h,
                                  std::span<const double> rate,
                                  const FrenetOptions& opt) {
  const long n = static_cast<long>(t_raw.size());
  const long margin = interior_margin(opt.fd_order);
  auto scale = [&](long i) { return rate.empty() ? 1.0 : rate[i]; };

  const std::vector<Vec3> t_dot = fd_derivative(t_raw, h, opt.fd_order);

  FrameProfiles out;
  out.kappa.resize(n);
  for (long i = 0; i < n; ++i) out.kappa[i] = t_dot[i].norm() / scale(i);

  bool degenerate = false;
  for (long i = margin; i < n - margin; ++i)
    if (out.kappa[i] < opt.kappa_min) degenerate = true;
  if (degenerate) {
    double kmax = 0.0;
    for (long i = 0; i < n; ++i) kmax = std::max(kmax, out.kappa[i]);
    throw GeodesicDegeneracyError(
        "curvature below kappa_min: the Frenet frame is undefined",
        kmax < opt.kappa_min);
  }

  out.T.resize(n);
  out.N.resize(n);
  out.B.resize(n);
  for (long i = 0; i < n; ++i) {
    const Vec3 t = t_raw[i].normalized();
    Vec3 nvec = t_dot[i] - t_dot[i].dot(t) * t;
    const double nn = nvec.norm();
    if (nn < 1e-300) {
      // Only reachable at endpoint samples of near-degenerate data.
      nvec = std::abs(t.x()) < 0.9 ? Vec3::UnitX().cross(t)
                                   : Vec3::UnitY().cross(t);
      nvec.normalize();
    } else {
      nvec /= nn;
    }
    out.T[i] = t;
    out.N[i] = nvec;
    out.B[i] = t.cross(nvec);
  }

  const std::vector<Vec3> n_dot = fd_derivative(out.N, h, opt.fd_order);
  out.tau_tilde.resize(n);
  for (long i = 0; i < n; ++i)
    out.tau_tilde[i] = n_dot[i].dot(out.B[i]) / scale(i);
  return out;
}

FrenetData assemble(const GroupSpec& g, std::vector<double> s,
                    FrameProfiles&& f, int fd_order, double unit_speed_dev) {
  FrenetData fd;
  fd.group = g;
  fd.s = std::move(s);
  fd.T = std::move(f.T);
  fd.N = std::move(f.N);
  fd.B = std::move(f.B);
  fd.kappa = std::move(f.kappa);
  fd.tau_g = g.tau_g();
  fd.tau = std::move(f.tau_tilde);
  for (double& t : fd.tau) t += fd.tau_g;
  fd.fd_order = fd_order;
  fd.max_unit_speed_dev = unit_speed_dev;
  return fd;
}

void require_samples(long n) {
  if (n < kMinSamples)
    throw Error(ErrorCode::InsufficientSamples,
                "insufficient samples: need at least " +
                    std::to_string(kMinSamples) + ", got " +
                    std::to_string(n));
}

}  // namespace

FrenetData frenet_apparatus(const SampledCurve& curve,
                            const FrenetOptions& opt) {
  require_samples(curve.size());
  const std::vector<Vec3> t_raw = body_velocity(
      curve.group, curve.points, curve.h, opt.fd_order, opt.unit_speed_tol);

  const long margin = interior_margin(opt.fd_order);
  double dev = 0.0;
  for (long i = margin; i < curve.size() - margin; ++i)
    dev = std::max(dev, std::abs(t_raw[i].norm() - 1.0));

  return assemble(curve.group, curve.grid(),
                  frame_from_tangents(t_raw, curve.h, {}, opt), opt.fd_order,
                  dev);
}

FrenetData frenet_of_algebra_curve(const AlgebraCurve& curve,
                                   const FrenetOptions& opt) {
  require_samples(curve.size());
  const std::vector<Vec3> deriv =
      fd_derivative(curve.points, curve.h, opt.fd_order);
  const long margin = interior_margin(opt.fd_order);
  double dev = 0.0;
  double min_speed = std::numeric_limits<double>::infinity();
  for (long i = margin; i < curve.size() - margin; ++i) {
    const double v = deriv[i].norm();
    dev = std::max(dev, std::abs(v - 1.0));
    min_speed = std::min(min_speed, v);
  }
  if (min_speed < opt.speed_min)
    throw Error(ErrorCode::IrregularCurve,
                "algebra curve speed below speed_min; Frenet data undefined");

  if (dev > opt.unit_speed_tol) {
    const AlgebraCurve unit = reparametrize_to_arclength(curve, opt);
    return frenet_of_algebra_curve(unit, opt);
  }

  return assemble(curve.group, curve.grid(),
                  frame_from_tangents(deriv, curve.h, {}, opt), opt.fd_order,
                  dev);
}

ReparamResult reparametrize_to_arclength_map(const AlgebraCurve& curve,
                                             const FrenetOptions& opt) {
  require_samples(curve.size());
  const long n = curve.size();
  const std::vector<Vec3> deriv =
      fd_derivative(curve.points, curve.h, opt.fd_order);

  ReparamResult out;
  out.speed.resize(n);
  for (long i = 0; i < n; ++i) out.speed[i] = deriv[i].norm();
  for (long i = 0; i < n; ++i)
    if (out.speed[i] < opt.speed_min)
      throw Error(ErrorCode::IrregularCurve,
                  "curve speed below speed_min; arc length is not invertible");

  out.arc = cumulative_trapezoid(out.speed, curve.h);
  const double length = out.arc.back();

  std::vector<std::vector<double>> comp(3, std::vector<double>(n));
  for (long i = 0; i < n; ++i)
    for (int d = 0; d < 3; ++d) comp[d][i] = curve.points[i][d];
  std::vector<CubicSpline> splines;
  splines.reserve(3);
  for (int d = 0; d < 3; ++d) splines.emplace_back(out.arc, comp[d]);

  out.curve.group = curve.group;
  out.curve.s0 = 0.0;
  out.curve.h = length / static_cast<double>(n - 1);
  out.curve.points.resize(n);
  for (long i = 0; i < n; ++i) {
    const double si = out.curve.s(i);
    out.curve.points[i] = Vec3(splines[0](si), splines[1](si), splines[2](si));
  }
  return out;
}

AlgebraCurve reparametrize_to_arclength(const AlgebraCurve& curve,
                                        const FrenetOptions& opt) {
  return reparametrize_to_arclength_map(curve, opt).curve;
}

FrenetData frenet_along_rate(const GroupSpec& g, double h,
                             std::span<const Vec3> tangent,
                             std::span<const double> rate,
                             const FrenetOptions& opt) {
  require_samples(static_cast<long>(tangent.size()));
  if (tangent.size() != rate.size())
    throw Error(ErrorCode::InvalidArgument,
                "tangent and rate profiles must have equal length");
  for (double r : rate)
    if (!(r > 0.0))
      throw Error(ErrorCode::InvalidArgument,
                  "arc rate must be strictly positive");
  std::vector<double> rate_vec(rate.begin(), rate.end());
  FrameProfiles f = frame_from_tangents(tangent, h, rate_vec, opt);
  return assemble(g, cumulative_trapezoid(rate_vec, h), std::move(f),
                  opt.fd_order, 0.0);
}

}  // namespace liecurve
