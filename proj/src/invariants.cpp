#include "invariants.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "fd.hpp"

namespace liecurve {

namespace {

bool grid_is_uniform(const std::vector<double>& s) {
  if (s.size() < 3) return true;
  const double h = s[1] - s[0];
  for (size_t i = 1; i + 1 < s.size(); ++i)
    if (std::abs(s[i + 1] - s[i] - h) > 1e-9 * std::abs(h)) return false;
  return true;
}

std::pair<long, long> interior_window(long n, double fraction) {
  const long drop = static_cast<long>(
      std::floor(0.5 * (1.0 - fraction) * static_cast<double>(n)));
  return {drop, n - drop};
}

}  // namespace

const char* curve_class_name(CurveClass c) {
  switch (c) {
    case CurveClass::Geodesic: return "Geodesic";
    case CurveClass::CircularHelix: return "CircularHelix";
    case CurveClass::GeneralHelix: return "GeneralHelix";
    case CurveClass::SlantHelix: return "SlantHelix";
    case CurveClass::Generic: return "Generic";
  }
  return "?";
}

long MaskedProfile::valid_count() const {
  long c = 0;
  for (char v : valid) c += (v != 0);
  return c;
}

ProfileStats profile_stats(std::span<const double> values,
                           std::span<const char> valid, long lo, long hi,
                           double scale_floor) {
  ProfileStats st;
  double sum = 0.0;
  long total = 0;
  st.min = std::numeric_limits<double>::infinity();
  st.max = -st.min;
  for (long i = lo; i < hi; ++i) {
    ++total;
    if (!valid.empty() && !valid[i]) continue;
    sum += values[i];
    st.min = std::min(st.min, values[i]);
    st.max = std::max(st.max, values[i]);
    ++st.count;
  }
  if (st.count == 0) return st;
  st.mean = sum / static_cast<double>(st.count);
  double var = 0.0;
  for (long i = lo; i < hi; ++i) {
    if (!valid.empty() && !valid[i]) continue;
    const double d = values[i] - st.mean;
    var += d * d;
  }
  var /= static_cast<double>(st.count);
  st.rel_std = std::sqrt(var) / std::max(std::abs(st.mean), scale_floor);
  st.masked_fraction =
      total > 0 ? 1.0 - double(st.count) / double(total) : 0.0;
  st.defined = true;
  return st;
}

HarmonicCurvature harmonic_curvature(const FrenetData& fd, double kappa_min) {
  const long n = fd.size();
  bool all_degenerate = true;
  for (long i = 0; i < n; ++i)
    if (fd.kappa[i] >= kappa_min) all_degenerate = false;
  if (all_degenerate)
    throw GeodesicDegeneracyError(
        "curvature below kappa_min everywhere; H is undefined", true);

  HarmonicCurvature out;
  out.H.resize(n);
  for (long i = 0; i < n; ++i)
    out.H[i] = (fd.tau[i] - fd.tau_g) / std::max(fd.kappa[i], kappa_min);
  if (grid_is_uniform(fd.s) && n >= kMinSamples)
    out.Hprime = fd_derivative(out.H, fd.grid_step(), fd.fd_order);
  return out;
}

MaskedProfile sigma_n_profile(const FrenetData& fd, std::span<const double> H,
                              std::span<const double> Hprime,
                              double hprime_min) {
  const long n = fd.size();
  MaskedProfile out;
  out.value.assign(n, 0.0);
  out.valid.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    if (std::abs(Hprime[i]) <= hprime_min) continue;
    out.valid[i] = 1;
    out.value[i] =
        fd.kappa[i] * std::pow(1.0 + H[i] * H[i], 1.5) / Hprime[i];
  }
  if (out.valid_count() == 0)
    throw Error(ErrorCode::ConstantH,
                "H' vanishes everywhere: sigma_N undefined (general helix)");
  return out;
}

MaskedProfile special_sigma(const GroupSpec& g, std::span<const double> kappa,
                            std::span<const double> tau, double h,
                            int fd_order, double hprime_min) {
  const long n = static_cast<long>(kappa.size());
  if (tau.size() != kappa.size())
    throw Error(ErrorCode::InvalidArgument,
                "kappa and tau profiles must have equal length");
  const double tau_g = g.tau_g();
  std::vector<double> ratio(n);
  for (long i = 0; i < n; ++i)
    ratio[i] = (tau[i] - tau_g) / std::max(kappa[i], 1e-300);
  const std::vector<double> ratio_prime = fd_derivative(ratio, h, fd_order);

  MaskedProfile out;
  out.value.assign(n, 0.0);
  out.valid.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    if (std::abs(ratio_prime[i]) <= hprime_min) continue;
    out.valid[i] = 1;
    const double shifted = tau[i] - tau_g;
    const double num =
        std::pow(kappa[i] * kappa[i] + shifted * shifted, 1.5);
    out.value[i] = num / (kappa[i] * kappa[i] * ratio_prime[i]);
  }
  if (out.valid_count() == 0)
    throw Error(ErrorCode::ConstantH,
                "(tau - tau_g)/kappa has vanishing derivative everywhere");
  return out;
}

AxisResult slant_axis(const FrenetData& fd, std::span<const double> H,
                      std::span<const double> Hprime, double sigma,
                      const ConstancyTolerances& tol) {
  const long n = fd.size();
  const auto [lo, hi] = interior_window(n, tol.interior_fraction);
  const double cos_theta = 1.0 / std::sqrt(1.0 + sigma * sigma);

  AxisResult out;
  out.cos_theta = cos_theta;
  Vec3 acc = Vec3::Zero();
  for (long i = lo; i < hi; ++i) {
    if (std::abs(Hprime[i]) <= tol.hprime_min) continue;
    const double one_h2 = 1.0 + H[i] * H[i];
    const double ct = fd.kappa[i] * H[i] * one_h2 / Hprime[i];
    const double cb = fd.kappa[i] * one_h2 / Hprime[i];
    const Vec3 x =
        cos_theta * (ct * fd.T[i] + fd.N[i] + cb * fd.B[i]);
    out.samples.push_back(x);
    acc += x;
  }
  if (out.samples.empty())
    throw Error(ErrorCode::NotSlantHelix,
                "no unmasked samples available for the axis");
  const Vec3 raw_mean = acc / static_cast<double>(out.samples.size());
  for (const Vec3& x : out.samples)
    out.max_dev = std::max(out.max_dev, (x - raw_mean).norm());
  out.mean = raw_mean.normalized();
  out.n_dot_axis.reserve(hi - lo);
  for (long i = lo; i < hi; ++i) out.n_dot_axis.push_back(fd.N[i].dot(out.mean));
  return out;
}

AxisResult axis(const FrenetData& fd, const InvariantReport& report) {
  if (report.classification != CurveClass::SlantHelix)
    throw Error(ErrorCode::NotSlantHelix,
                "axis requires a SlantHelix classification, got " +
                    std::string(curve_class_name(report.classification)));
  return slant_axis(fd, report.H, report.Hprime, report.sigma_stats.mean,
                    report.tol);
}

InvariantReport classify(const FrenetData& fd,
                         const ConstancyTolerances& tol) {
  const long n = fd.size();
  InvariantReport rep;
  rep.tol = tol;
  const auto [lo, hi] = interior_window(n, tol.interior_fraction);
  rep.window_lo = lo;
  rep.window_hi = hi;

  rep.kappa_stats = profile_stats(fd.kappa, {}, lo, hi, 0.0);
  rep.tau_stats =
      profile_stats(fd.tau, {}, lo, hi, std::abs(rep.kappa_stats.mean));

  double kappa_max = 0.0;
  for (long i = 0; i < n; ++i) kappa_max = std::max(kappa_max, fd.kappa[i]);
  if (kappa_max < tol.kappa_min) {
    rep.classification = CurveClass::Geodesic;
    return rep;
  }

  const HarmonicCurvature hc = harmonic_curvature(fd, tol.kappa_min);
  rep.H = hc.H;
  rep.Hprime = hc.Hprime;
  rep.H_stats = profile_stats(rep.H, {}, lo, hi, 1.0);

  if (rep.kappa_stats.rel_std <= tol.rel_std &&
      rep.tau_stats.rel_std <= tol.rel_std) {
    rep.classification = CurveClass::CircularHelix;
    return rep;
  }

  if (rep.H_stats.rel_std <= tol.rel_std) {
    rep.classification = CurveClass::GeneralHelix;
    rep.general_slope = rep.H_stats.mean;
    Vec3 acc = Vec3::Zero();
    std::vector<Vec3> samples;
    samples.reserve(hi - lo);
    for (long i = lo; i < hi; ++i) {
      const Vec3 x = (rep.H[i] * fd.T[i] + fd.B[i]) /
                     std::sqrt(1.0 + rep.H[i] * rep.H[i]);
      samples.push_back(x);
      acc += x;
    }
    const Vec3 raw_mean = acc / static_cast<double>(samples.size());
    for (const Vec3& x : samples)
      rep.axis_max_dev = std::max(rep.axis_max_dev, (x - raw_mean).norm());
    rep.axis = raw_mean.normalized();
    return rep;
  }

  if (!rep.Hprime.empty()) {
    try {
      rep.sigma = sigma_n_profile(fd, rep.H, rep.Hprime, tol.hprime_min);
      rep.sigma_stats = profile_stats(rep.sigma.value, rep.sigma.valid, lo, hi,
                                      1.0);
      const bool enough_window =
          rep.sigma_stats.count * 2 >= (hi - lo) && rep.sigma_stats.defined;
      if (enough_window && rep.sigma_stats.rel_std <= tol.rel_std) {
        rep.classification = CurveClass::SlantHelix;
        rep.theta = std::atan(rep.sigma_stats.mean);
        const AxisResult ax =
            slant_axis(fd, rep.H, rep.Hprime, rep.sigma_stats.mean, tol);
        rep.axis = ax.mean;
        rep.axis_max_dev = ax.max_dev;
        double acc = 0.0;
        for (double v : ax.n_dot_axis) acc += v;
        rep.mean_n_dot_axis =
            ax.n_dot_axis.empty()
                ? 0.0
                : acc / static_cast<double>(ax.n_dot_axis.size());
        return rep;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstantH) throw;
      // H' vanishes everywhere but H failed the constancy test: fall through.
    }
  }

  rep.classification = CurveClass::Generic;
  return rep;
}

}  // namespace liecurve
