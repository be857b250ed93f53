#include "synthesis.hpp"

#include <cmath>

#include "errors.hpp"

namespace liecurve {

namespace {

struct Frame9 {
  Vec3 T, N, B;

  Frame9 operator+(const Frame9& o) const { return {T + o.T, N + o.N, B + o.B}; }
  Frame9 operator*(double a) const { return {a * T, a * N, a * B}; }
};

Frame9 frame_rate(const GroupSpec& g, const Profile& p, double s,
                  const Frame9& f) {
  const double k = p.kappa(s);
  const double te = p.tau(s) - g.tau_g();  // effective torsion
  return {k * f.N, -k * f.T + te * f.B, -te * f.N};
}

Frame9 rk4_step(const GroupSpec& g, const Profile& p, double s,
                const Frame9& f, double h) {
  const Frame9 k1 = frame_rate(g, p, s, f);
  const Frame9 k2 = frame_rate(g, p, s + 0.5 * h, f + k1 * (0.5 * h));
  const Frame9 k3 = frame_rate(g, p, s + 0.5 * h, f + k2 * (0.5 * h));
  const Frame9 k4 = frame_rate(g, p, s + h, f + k3 * h);
  return f + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

Frame9 orthonormalized(const Frame9& f) {
  Frame9 out;
  out.T = f.T.normalized();
  out.N = (f.N - f.N.dot(out.T) * out.T).normalized();
  out.B = out.T.cross(out.N);
  return out;
}

}  // namespace

long Profile::steps() const {
  const long n = std::lround((s1 - s0) / h);
  return n;
}

SynthesisResult integrate_frenet(const GroupSpec& g, const Profile& profile,
                                 const GroupElement& start,
                                 const FrameState& frame0) {
  if (!(profile.h > 0.0) || !(profile.s1 > profile.s0))
    throw Error(ErrorCode::InvalidArgument, "profile domain or step invalid");
  if (profile.h > 1e-2 + 1e-12)
    throw Error(ErrorCode::InvalidArgument,
                "integration step must not exceed 1e-2");
  const long steps = profile.steps();
  if (steps < 1)
    throw Error(ErrorCode::InsufficientSamples, "profile spans less than one step");

  Frame9 f{frame0.T, frame0.N, frame0.B};
  {
    const double defect = std::abs(f.T.norm() - 1.0) + std::abs(f.N.norm() - 1.0) +
                          std::abs(f.T.dot(f.N)) + (f.T.cross(f.N) - f.B).norm();
    if (defect > 1e-6)
      throw Error(ErrorCode::InvalidArgument,
                  "initial frame must be orthonormal and right-handed");
  }
  f = orthonormalized(f);

  const double h = profile.h;
  // Gauss-Legendre nodes and the two-exponential weights of the
  // commutator-free fourth-order step for pdot = p * T(s).
  const double root3 = std::sqrt(3.0);
  const double c1 = 0.5 - root3 / 6.0;
  const double c2 = 0.5 + root3 / 6.0;
  const double wa = 0.25 + root3 / 6.0;
  const double wb = 0.25 - root3 / 6.0;

  SynthesisResult out;
  out.curve.group = g;
  out.curve.s0 = profile.s0;
  out.curve.h = h;
  out.curve.points.reserve(steps + 1);
  out.fd.group = g;
  out.fd.tau_g = g.tau_g();
  out.fd.s.reserve(steps + 1);

  GroupElement p = start;
  auto record = [&](double s, const Frame9& fr) {
    out.curve.points.push_back(p);
    out.fd.s.push_back(s);
    out.fd.T.push_back(fr.T);
    out.fd.N.push_back(fr.N);
    out.fd.B.push_back(fr.B);
    out.fd.kappa.push_back(profile.kappa(s));
    out.fd.tau.push_back(profile.tau(s));
  };

  record(profile.s0, f);
  for (long i = 0; i < steps; ++i) {
    const double s = profile.s0 + static_cast<double>(i) * h;
    // Frame values at the Gauss nodes via RK4 substeps.
    const Frame9 f1 = rk4_step(g, profile, s, f, c1 * h);
    const Frame9 f2 = rk4_step(g, profile, s + c1 * h, f1, (c2 - c1) * h);
    Frame9 fe = rk4_step(g, profile, s + c2 * h, f2, (1.0 - c2) * h);

    p = advance(g, p, wa * f1.T + wb * f2.T, h);
    p = advance(g, p, wb * f1.T + wa * f2.T, h);

    fe = orthonormalized(fe);
    f = fe;
    record(s + h, f);
  }
  return out;
}

SynthesisResult integrate_frenet(const GroupSpec& g, const Profile& profile) {
  return integrate_frenet(g, profile, group_identity(g), FrameState{});
}

Profile slant_helix_profile(const GroupSpec& g, double m, double kappa0,
                            double s0, double s1, double h) {
  if (!(kappa0 > 0.0) || m == 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "slant helix family requires kappa0 > 0 and m != 0");
  const double reach =
      std::max(std::abs(s0), std::abs(s1)) * kappa0 / std::abs(m);
  if (reach > 0.95)
    throw Error(ErrorCode::DomainExceedsSingularity,
                "domain reaches the H singularity at |s| = |m|/kappa0 "
                "(5% margin required)");
  const double tau_g = g.tau_g();
  auto H = [m, kappa0](double s) {
    const double u = kappa0 * s / m;
    return u / std::sqrt(1.0 - u * u);
  };
  Profile p;
  p.kappa = [kappa0](double) { return kappa0; };
  p.tau = [H, tau_g, kappa0](double s) { return tau_g + kappa0 * H(s); };
  p.s0 = s0;
  p.s1 = s1;
  p.h = h;
  return p;
}

Profile general_helix_profile(const GroupSpec& g, double slope,
                              std::function<double(double)> kappa, double s0,
                              double s1, double h) {
  const double tau_g = g.tau_g();
  Profile p;
  p.kappa = kappa;
  p.tau = [kappa, slope, tau_g](double s) { return slope * kappa(s) + tau_g; };
  p.s0 = s0;
  p.s1 = s1;
  p.h = h;
  return p;
}

Profile constant_profile(double kappa0, double tau0, double s0, double s1,
                         double h) {
  Profile p;
  p.kappa = [kappa0](double) { return kappa0; };
  p.tau = [tau0](double) { return tau0; };
  p.s0 = s0;
  p.s1 = s1;
  p.h = h;
  return p;
}

}  // namespace liecurve
