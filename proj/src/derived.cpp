#include "derived.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "fd.hpp"
#include "spline.hpp"

namespace liecurve {

namespace {

struct Window {
  long lo, hi;  // half-open
};

Window interior(long n, double fraction) {
  const long drop = static_cast<long>(
      std::floor(0.5 * (1.0 - fraction) * static_cast<double>(n)));
  return {drop, n - drop};
}

double uniform_step(const FrenetData& fd) {
  const long n = fd.size();
  if (n < 2)
    throw Error(ErrorCode::InsufficientSamples, "derived curve source too short");
  const double h = fd.s[1] - fd.s[0];
  for (long i = 1; i + 1 < n; ++i)
    if (std::abs(fd.s[i + 1] - fd.s[i] - h) > 1e-9 * h)
      throw Error(ErrorCode::InvalidArgument,
                  "derived curves need a uniform source grid");
  return h;
}

std::vector<double> slice(std::span<const double> v, long a, long b) {
  return {v.begin() + a, v.begin() + b};
}

std::vector<Vec3> slice(std::span<const Vec3> v, long a, long b) {
  return {v.begin() + a, v.begin() + b};
}

double eval_step_for(DerivedKind kind, const DerivedOptions& opt) {
  switch (kind) {
    case DerivedKind::Normal: return opt.normal_eval_step;
    case DerivedKind::Binormal: return opt.binormal_eval_step;
    default: return opt.eval_step;
  }
}

// Stride targeting the kind's evaluation step on the derived arc grid, which
// is where the differentiation happens; `arc_length` is the total arc.
long eval_stride(long n, double arc_length, DerivedKind kind,
                 const DerivedOptions& opt) {
  long k = std::lround(std::max(
      1.0, eval_step_for(kind, opt) * double(n - 1) / arc_length));
  // keep enough samples for the differentiation pipeline and the stats
  while (k > 1 && (n - 1) / k + 1 < 4 * kMinSamples) --k;
  return std::max(1L, k);
}

template <typename T>
std::vector<T> decimate(const std::vector<T>& v, long k) {
  std::vector<T> out;
  out.reserve(v.size() / k + 1);
  for (size_t i = 0; i < v.size(); i += size_t(k)) out.push_back(v[i]);
  return out;
}

/// <T_alpha, direction of dV/ds> at the source samples, interior max.
void fill_tangent_inner(const FrenetData& fd_a, long a, long b,
                        const std::vector<Vec3>& v, double h,
                        const DerivedOptions& opt, DerivedCurveResult* out) {
  const std::vector<Vec3> dv = fd_derivative(v, h, opt.frenet.fd_order);
  const long n = b - a;
  out->t_inner.resize(n);
  for (long i = 0; i < n; ++i) {
    const double nn = dv[i].norm();
    out->t_inner[i] = nn > 0.0 ? dv[i].dot(fd_a.T[a + i]) / nn : 0.0;
  }
  const Window w = interior(n, opt.tol.interior_fraction);
  out->max_t_inner = 0.0;
  for (long i = w.lo; i < w.hi; ++i)
    out->max_t_inner = std::max(out->max_t_inner, std::abs(out->t_inner[i]));
}

void fill_deltas(DerivedCurveResult* out, double fraction) {
  const long n = out->fd.size();
  const Window w = interior(n, fraction);
  out->max_kappa_delta = std::numeric_limits<double>::quiet_NaN();
  out->max_tau_delta = std::numeric_limits<double>::quiet_NaN();
  if (out->kappa_pred.empty()) return;
  out->max_kappa_delta = 0.0;
  out->max_tau_delta = 0.0;
  for (long i = w.lo; i < w.hi; ++i) {
    out->max_kappa_delta = std::max(
        out->max_kappa_delta, std::abs(out->fd.kappa[i] - out->kappa_pred[i]));
    out->max_tau_delta = std::max(
        out->max_tau_delta, std::abs(out->fd.tau[i] - out->tau_pred[i]));
  }
}

void fill_rate_delta(DerivedCurveResult* out, double fraction) {
  const long n = static_cast<long>(out->rate_measured.size());
  out->max_rate_delta = std::numeric_limits<double>::quiet_NaN();
  if (n == 0 || out->rate_pred.empty()) return;
  out->max_rate_delta = 0.0;
  const Window w = interior(n, fraction);
  for (long i = w.lo; i < w.hi; ++i)
    out->max_rate_delta =
        std::max(out->max_rate_delta,
                 std::abs(out->rate_measured[i] - out->rate_pred[i]));
}

/// Shared indicatrix pipeline over the source window [a, b).
DerivedCurveResult make_indicatrix(const FrenetData& fd_a, DerivedKind kind,
                                   long a, long b, const DerivedOptions& opt,
                                   const HarmonicCurvature& hc,
                                   bool alpha_is_slant) {
  const double h = uniform_step(fd_a);
  const long n = b - a;
  if (n < kMinSamples)
    throw Error(ErrorCode::InsufficientSamples,
                "indicatrix window has too few samples");

  DerivedCurveResult out;
  out.kind = kind;
  out.source_group = fd_a.group;
  out.window_begin = a;
  out.window_end = b;

  const std::vector<double> kap = slice(fd_a.kappa, a, b);
  const std::vector<double> H = slice(hc.H, a, b);
  const std::vector<double> Hp = slice(hc.Hprime, a, b);
  const std::vector<double> s_src = slice(fd_a.s, a, b);

  std::vector<Vec3> v;
  switch (kind) {
    case DerivedKind::Tangent: v = slice(fd_a.T, a, b); break;
    case DerivedKind::Normal: v = slice(fd_a.N, a, b); break;
    case DerivedKind::Binormal: v = slice(fd_a.B, a, b); break;
    case DerivedKind::Involute: break;
  }

  const GroupSpec torsion_spec =
      kind == DerivedKind::Normal ? GroupSpec::abelian() : fd_a.group;

  out.rate_pred.resize(n);
  out.epsilon = 1.0;
  if (kind == DerivedKind::Binormal)
    out.epsilon = H[n / 2] >= 0.0 ? 1.0 : -1.0;
  for (long i = 0; i < n; ++i) {
    switch (kind) {
      case DerivedKind::Tangent: out.rate_pred[i] = kap[i]; break;
      case DerivedKind::Normal:
        out.rate_pred[i] = kap[i] * std::sqrt(1.0 + H[i] * H[i]);
        break;
      case DerivedKind::Binormal:
        out.rate_pred[i] = out.epsilon * kap[i] * H[i];
        break;
      case DerivedKind::Involute: break;
    }
  }

  // Full-resolution indicatrix for output.
  AlgebraCurve full;
  full.group = torsion_spec;
  full.s0 = s_src.front();
  full.h = h;
  full.points = v;
  out.curve = reparametrize_to_arclength(full, opt.frenet);

  // Measured apparatus on the noise-balanced evaluation grid.
  const double arc_estimate =
      cumulative_trapezoid(out.rate_pred, h).back();
  const long stride = eval_stride(n, arc_estimate, kind, opt);
  AlgebraCurve coarse;
  coarse.group = torsion_spec;
  coarse.s0 = s_src.front();
  coarse.h = h * double(stride);
  coarse.points = decimate(v, stride);
  const ReparamResult rep = reparametrize_to_arclength_map(coarse, opt.frenet);
  out.fd = frenet_of_algebra_curve(rep.curve, opt.frenet);
  out.verdict = classify(out.fd, opt.tol);

  // Measured ds*/ds against the closed-form rate, on the full source grid.
  {
    const std::vector<Vec3> dv = fd_derivative(v, h, opt.frenet.fd_order);
    out.rate_measured.resize(n);
    for (long i = 0; i < n; ++i) out.rate_measured[i] = dv[i].norm();
  }
  fill_rate_delta(&out, opt.tol.interior_fraction);

  // Closed-form predictions mapped onto the measured arc grid.
  const bool predict = kind != DerivedKind::Normal || alpha_is_slant;
  if (predict) {
    const std::vector<double> s_coarse = decimate(s_src, stride);
    CubicSpline s_of_arc(rep.arc, s_coarse);
    CubicSpline H_of_s(s_src, H);
    CubicSpline Hp_of_s(s_src, Hp);
    CubicSpline k_of_s(s_src, kap);
    const long m = out.fd.size();
    out.kappa_pred.resize(m);
    out.tau_pred.resize(m);
    out.tau_g_pred = torsion_spec.tau_g();
    for (long j = 0; j < m; ++j) {
      const double sj = s_of_arc(out.fd.s[j]);
      const double Hj = H_of_s(sj);
      const double Hpj = Hp_of_s(sj);
      const double kj = k_of_s(sj);
      const double one_h2 = 1.0 + Hj * Hj;
      switch (kind) {
        case DerivedKind::Tangent:
          out.kappa_pred[j] = std::sqrt(one_h2);
          out.tau_pred[j] = Hpj / (kj * one_h2) + out.tau_g_pred;
          break;
        case DerivedKind::Normal: {
          const double sig = kj * std::pow(one_h2, 1.5) / Hpj;
          out.kappa_pred[j] = std::sqrt(1.0 + sig * sig) / std::abs(sig);
          out.tau_pred[j] = 0.0;
          break;
        }
        case DerivedKind::Binormal:
          // Note the sign: B_delta = (H T + B)/sqrt(1+H^2), so the measured
          // torsion is the negative of the tangent-indicatrix expression.
          out.kappa_pred[j] = std::sqrt(one_h2) / std::abs(Hj);
          out.tau_pred[j] =
              -Hpj / (kj * std::abs(Hj) * one_h2) + out.tau_g_pred;
          break;
        case DerivedKind::Involute: break;
      }
    }
    fill_deltas(&out, opt.tol.interior_fraction);
  }

  if (kind != DerivedKind::Normal)
    fill_tangent_inner(fd_a, a, b, v, h, opt, &out);
  return out;
}

void check_kappa(const FrenetData& fd, long a, long b, double kappa_min,
                 int fd_order) {
  const long margin = fd_order == 4 ? 2 : 1;
  for (long i = a + margin; i < b - margin; ++i)
    if (fd.kappa[i] < kappa_min)
      throw GeodesicDegeneracyError(
          "curvature below kappa_min inside the indicatrix window", false);
}

}  // namespace

const char* derived_kind_name(DerivedKind k) {
  switch (k) {
    case DerivedKind::Tangent: return "tangent";
    case DerivedKind::Normal: return "normal";
    case DerivedKind::Binormal: return "binormal";
    case DerivedKind::Involute: return "involute";
  }
  return "?";
}

DerivedCurveResult tangent_indicatrix(const FrenetData& fd_alpha,
                                      const DerivedOptions& opt) {
  uniform_step(fd_alpha);
  check_kappa(fd_alpha, 0, fd_alpha.size(), opt.frenet.kappa_min,
              opt.frenet.fd_order);
  const HarmonicCurvature hc =
      harmonic_curvature(fd_alpha, opt.frenet.kappa_min);
  return make_indicatrix(fd_alpha, DerivedKind::Tangent, 0, fd_alpha.size(),
                         opt, hc, false);
}

DerivedCurveResult normal_indicatrix(const FrenetData& fd_alpha,
                                     const DerivedOptions& opt) {
  uniform_step(fd_alpha);
  check_kappa(fd_alpha, 0, fd_alpha.size(), opt.frenet.kappa_min,
              opt.frenet.fd_order);
  const HarmonicCurvature hc =
      harmonic_curvature(fd_alpha, opt.frenet.kappa_min);
  const bool slant =
      classify(fd_alpha, opt.tol).classification == CurveClass::SlantHelix;
  return make_indicatrix(fd_alpha, DerivedKind::Normal, 0, fd_alpha.size(),
                         opt, hc, slant);
}

std::vector<DerivedCurveResult> binormal_indicatrix(const FrenetData& fd_alpha,
                                                    const DerivedOptions& opt) {
  uniform_step(fd_alpha);
  check_kappa(fd_alpha, 0, fd_alpha.size(), opt.frenet.kappa_min,
              opt.frenet.fd_order);
  const HarmonicCurvature hc =
      harmonic_curvature(fd_alpha, opt.frenet.kappa_min);
  const long n = fd_alpha.size();

  // Maximal sign-definite windows of H above the vanishing floor.
  std::vector<Window> windows;
  long start = -1;
  int sign = 0;
  for (long i = 0; i <= n; ++i) {
    const bool valid = i < n && std::abs(hc.H[i]) > opt.vanishing_h;
    const int s = valid ? (hc.H[i] > 0.0 ? 1 : -1) : 0;
    if (valid && start >= 0 && s == sign) continue;
    if (start >= 0 && i - start >= kMinSamples) windows.push_back({start, i});
    start = valid ? i : -1;
    sign = s;
  }
  if (windows.empty())
    throw Error(ErrorCode::VanishingH,
                "|H| <= vanishing floor on the whole curve; the binormal "
                "indicatrix is degenerate");

  std::vector<DerivedCurveResult> out;
  out.reserve(windows.size());
  for (const Window& w : windows)
    out.push_back(make_indicatrix(fd_alpha, DerivedKind::Binormal, w.lo, w.hi,
                                  opt, hc, false));
  return out;
}

DerivedCurveResult involute(const SampledCurve& curve,
                            const FrenetData& fd_alpha, double c,
                            const DerivedOptions& opt) {
  const double h = uniform_step(fd_alpha);
  const long n = fd_alpha.size();
  check_kappa(fd_alpha, 0, n, opt.frenet.kappa_min, opt.frenet.fd_order);

  double min_dist = std::numeric_limits<double>::infinity();
  for (long i = 0; i < n; ++i)
    min_dist = std::min(min_dist, std::abs(c - fd_alpha.s[i]));
  if (min_dist <= h)
    throw Error(ErrorCode::CuspInRange,
                "involute offset c lies within one grid step of the domain "
                "(cusp psi' = 0)");

  const HarmonicCurvature hc =
      harmonic_curvature(fd_alpha, opt.frenet.kappa_min);
  const double eps = c > fd_alpha.s.back() ? 1.0 : -1.0;

  DerivedCurveResult out;
  out.kind = DerivedKind::Involute;
  out.source_group = fd_alpha.group;
  out.involute_c = c;
  out.epsilon = eps;
  out.window_begin = 0;
  out.window_end = n;

  std::vector<Vec3> t_x(n);
  std::vector<double> rate(n);
  for (long i = 0; i < n; ++i) {
    t_x[i] = eps * fd_alpha.N[i];
    rate[i] = eps * (c - fd_alpha.s[i]) * fd_alpha.kappa[i];
  }
  out.curve.group = fd_alpha.group;
  out.curve.s0 = fd_alpha.s.front();
  out.curve.h = h;
  out.curve.points = t_x;
  out.rate_pred = rate;

  const double arc_estimate = cumulative_trapezoid(rate, h).back();
  const long stride = eval_stride(n, arc_estimate, DerivedKind::Involute, opt);
  const std::vector<double> s_coarse = decimate(fd_alpha.s, stride);
  const FrenetData frame_fd = frenet_along_rate(
      fd_alpha.group, h * double(stride), decimate(t_x, stride),
      decimate(rate, stride), opt.frenet);
  out.psi = frame_fd.s;

  // Frame-level orthogonality <T, T_x> is exact by construction.
  out.t_inner.resize(n);
  for (long i = 0; i < n; ++i)
    out.t_inner[i] = fd_alpha.T[i].dot(t_x[i]);
  const Window w = interior(n, opt.tol.interior_fraction);
  for (long i = w.lo; i < w.hi; ++i)
    out.max_t_inner = std::max(out.max_t_inner, std::abs(out.t_inner[i]));

  auto closed_forms = [&](double dist, double Hj, double Hpj, double kj,
                          double tau_g, double* kp, double* tp) {
    const double one_h2 = 1.0 + Hj * Hj;
    *kp = std::sqrt(one_h2) / (eps * dist);
    *tp = Hpj / (dist * kj * one_h2) + tau_g;
  };

  if (fd_alpha.group.kind == GroupKind::Abelian) {
    // Literal point curve, analyzed like any other space curve.
    AlgebraCurve xcurve;
    xcurve.group = GroupSpec::abelian();
    xcurve.s0 = fd_alpha.s.front();
    xcurve.h = h;
    xcurve.points.resize(n);
    for (long i = 0; i < n; ++i)
      xcurve.points[i] = std::get<Vec3>(curve.points[i]) +
                         (c - fd_alpha.s[i]) * fd_alpha.T[i];
    out.literal_curve = xcurve;

    AlgebraCurve xcoarse;
    xcoarse.group = xcurve.group;
    xcoarse.s0 = xcurve.s0;
    xcoarse.h = h * double(stride);
    xcoarse.points = decimate(xcurve.points, stride);
    const ReparamResult rep =
        reparametrize_to_arclength_map(xcoarse, opt.frenet);
    out.fd = frenet_of_algebra_curve(rep.curve, opt.frenet);

    // Measured speed against psi' = (c - s) kappa on the full grid.
    const std::vector<Vec3> dx =
        fd_derivative(xcurve.points, h, opt.frenet.fd_order);
    out.rate_measured.resize(n);
    for (long i = 0; i < n; ++i) out.rate_measured[i] = dx[i].norm();
    fill_rate_delta(&out, opt.tol.interior_fraction);

    CubicSpline s_of_arc(rep.arc, s_coarse);
    CubicSpline H_of_s(fd_alpha.s, hc.H);
    CubicSpline Hp_of_s(fd_alpha.s, hc.Hprime);
    CubicSpline k_of_s(fd_alpha.s, fd_alpha.kappa);
    const long m = out.fd.size();
    out.kappa_pred.resize(m);
    out.tau_pred.resize(m);
    out.tau_g_pred = fd_alpha.tau_g;
    for (long j = 0; j < m; ++j) {
      const double sj = s_of_arc(out.fd.s[j]);
      closed_forms(eps * (c - sj), H_of_s(sj), Hp_of_s(sj), k_of_s(sj),
                   out.tau_g_pred, &out.kappa_pred[j], &out.tau_pred[j]);
    }
  } else {
    out.fd = frame_fd;
    out.tau_g_pred = fd_alpha.tau_g;
    const long m = out.fd.size();
    out.kappa_pred.resize(m);
    out.tau_pred.resize(m);
    for (long j = 0; j < m; ++j) {
      const long i = j * stride;
      closed_forms(eps * (c - fd_alpha.s[i]), hc.H[i], hc.Hprime[i],
                   fd_alpha.kappa[i], out.tau_g_pred, &out.kappa_pred[j],
                   &out.tau_pred[j]);
    }

    // Ambient polyline p + (c - s) * (left-translated T); visualization only,
    // not a group curve.
    out.embedding.resize(n);
    for (long i = 0; i < n; ++i) {
      const double d = c - fd_alpha.s[i];
      const Vec3& t = fd_alpha.T[i];
      if (fd_alpha.group.kind == GroupKind::SO3) {
        const Mat3& r = std::get<Mat3>(curve.points[i]);
        Mat3 hat;
        hat << 0, -t.z(), t.y(), t.z(), 0, -t.x(), -t.y(), t.x(), 0;
        const Mat3 m9 = r + d * (r * hat);
        std::vector<double> row(9);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) row[3 * a + b] = m9(a, b);
        out.embedding[i] = std::move(row);
      } else {
        const Quat& q = std::get<Quat>(curve.points[i]);
        const Quat tq(0.0, t.x(), t.y(), t.z());
        const Quat amb = q * tq;
        out.embedding[i] = {q.w() + d * amb.w(), q.x() + d * amb.x(),
                            q.y() + d * amb.y(), q.z() + d * amb.z()};
      }
    }
  }

  out.verdict = classify(out.fd, opt.tol);
  fill_deltas(&out, opt.tol.interior_fraction);
  return out;
}

}  // namespace liecurve
