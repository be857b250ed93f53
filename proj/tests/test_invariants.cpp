#include <doctest.h>

#include <cmath>

#include "frenet.hpp"
#include "invariants.hpp"
#include "oracles.hpp"
#include "synthesis.hpp"

using namespace liecurve;

namespace {

// FrenetData carrying only profiles (enough for H / sigma_N arithmetic).
FrenetData profile_data(const GroupSpec& g, double s0, double h, long n,
                        std::function<double(double)> kappa,
                        std::function<double(double)> tau) {
  FrenetData fd;
  fd.group = g;
  fd.tau_g = g.tau_g();
  fd.fd_order = 4;
  fd.s.resize(n);
  fd.kappa.resize(n);
  fd.tau.resize(n);
  for (long i = 0; i < n; ++i) {
    fd.s[i] = s0 + double(i) * h;
    fd.kappa[i] = kappa(fd.s[i]);
    fd.tau[i] = tau(fd.s[i]);
  }
  return fd;
}

double masked_max_abs_diff(const MaskedProfile& a, const MaskedProfile& b,
                           long lo, long hi) {
  double out = 0.0;
  for (long i = lo; i < hi; ++i) {
    if (!a.valid[i] || !b.valid[i]) continue;
    out = std::max(out, std::abs(a.value[i] - b.value[i]));
  }
  return out;
}

}  // namespace

TEST_CASE("harmonic curvature") {
  SUBCASE("su2 with kappa = tau = 1 has H = 0") {
    const auto fd = profile_data(GroupSpec::su2(), 0.0, 1e-3, 101,
                                 [](double) { return 1.0; },
                                 [](double) { return 1.0; });
    const auto hc = harmonic_curvature(fd);
    for (double h : hc.H) CHECK(std::abs(h) < 1e-14);
  }
  SUBCASE("so3 with kappa = 2, tau = 3/2 has H = 1/2") {
    const auto fd = profile_data(GroupSpec::so3(), 0.0, 1e-3, 101,
                                 [](double) { return 2.0; },
                                 [](double) { return 1.5; });
    const auto hc = harmonic_curvature(fd);
    for (double h : hc.H) CHECK(h == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("abelian reduces to the classical ratio") {
    const auto fd = profile_data(GroupSpec::abelian(), 0.2, 1e-3, 101,
                                 [](double) { return 0.5; },
                                 [](double s) { return s; });
    const auto hc = harmonic_curvature(fd);
    for (long i = 0; i < fd.size(); ++i)
      CHECK(hc.H[i] == doctest::Approx(fd.s[i] / 0.5).epsilon(1e-13));
  }
}

TEST_CASE("sigma_N on the closed-form slant family") {
  // H(s) = s / sqrt(1 - s^2) with kappa = 1 gives sigma_N = 1.
  // Independent oracle: integrate H' = kappa (1 + H^2)^(3/2) / m from
  // H(0) = 0 and compare against the closed form.
  const double h_oracle = oracles::rk4_scalar(
      [](double, double y) { return std::pow(1.0 + y * y, 1.5); }, 0.0, 0.0,
      0.6, 4000);
  CHECK(std::abs(h_oracle - 0.75) < 1e-8);

  const auto fd = profile_data(
      GroupSpec::abelian(), -0.8, 1e-3, 1601, [](double) { return 1.0; },
      [](double s) { return s / std::sqrt(1.0 - s * s); });
  const auto hc = harmonic_curvature(fd);
  const auto sigma = sigma_n_profile(fd, hc.H, hc.Hprime);
  const long n = fd.size();
  for (long i = n / 20; i < n - n / 20; ++i) {
    REQUIRE(sigma.valid[i]);
    CHECK(sigma.value[i] == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("sigma_N is undefined for constant H") {
  const auto fd = profile_data(GroupSpec::su2(), 0.0, 1e-3, 101,
                               [](double) { return 1.0; },
                               [](double) { return 1.0; });
  const auto hc = harmonic_curvature(fd);
  CHECK_THROWS_AS((void)sigma_n_profile(fd, hc.H, hc.Hprime), const Error&);
  try {
    (void)sigma_n_profile(fd, hc.H, hc.Hprime);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantH);
  }
}

TEST_CASE("group-specialized sigma agrees with the generic formula") {
  SUBCASE("abelian, kappa = 1/2, tau = s/2") {
    const auto fd = profile_data(GroupSpec::abelian(), 0.0, 1e-3, 1001,
                                 [](double) { return 0.5; },
                                 [](double s) { return 0.5 * s; });
    const auto hc = harmonic_curvature(fd);
    const auto generic = sigma_n_profile(fd, hc.H, hc.Hprime);
    const auto special =
        special_sigma(fd.group, fd.kappa, fd.tau, 1e-3, fd.fd_order);
    CHECK(masked_max_abs_diff(generic, special, 10, 991) < 1e-8);
  }
  SUBCASE("su2 with tau = 1 is the constant-H case") {
    const auto fd = profile_data(GroupSpec::su2(), 0.0, 1e-3, 101,
                                 [](double) { return 1.0; },
                                 [](double) { return 1.0; });
    CHECK_THROWS_AS(
        (void)special_sigma(fd.group, fd.kappa, fd.tau, 1e-3, 4),
        const Error&);
  }
  SUBCASE("so3 with the tau_g = 1/2 shift gives sigma_N = 1") {
    const auto fd = profile_data(
        GroupSpec::so3(), -0.8, 1e-3, 1601, [](double) { return 1.0; },
        [](double s) { return 0.5 + s / std::sqrt(1.0 - s * s); });
    const auto special =
        special_sigma(fd.group, fd.kappa, fd.tau, 1e-3, fd.fd_order);
    const long n = fd.size();
    for (long i = n / 20; i < n - n / 20; ++i)
      CHECK(special.value[i] == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("classification precedence") {
  SUBCASE("constant kappa and tau is a circular helix even though H is constant") {
    const GroupSpec g = GroupSpec::su2();
    const auto res =
        integrate_frenet(g, constant_profile(1.0, 1.7, 0.0, 2.0, 1e-3));
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::CircularHelix);
  }
  SUBCASE("general helix with varying kappa") {
    const GroupSpec g = GroupSpec::su2();
    const auto profile = general_helix_profile(
        g, 0.7, [](double s) { return 1.0 + 0.1 * std::sin(s); }, 0.0, 2.0,
        1e-3);
    const auto res = integrate_frenet(g, profile);
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::GeneralHelix);
    CHECK(std::abs(rep.general_slope - 0.7) < 1e-3);
    REQUIRE(rep.axis.has_value());
    CHECK(std::abs(rep.axis->norm() - 1.0) < 1e-6);
  }
  SUBCASE("slant helix") {
    const GroupSpec g = GroupSpec::so3();
    const auto res = integrate_frenet(
        g, slant_helix_profile(g, 1.0, 1.0, -0.85, 0.85, 1e-3));
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::SlantHelix);
    CHECK(std::abs(rep.theta - M_PI / 4.0) < 1e-3);
  }
  SUBCASE("generic curve: tau = tau_g + s^2") {
    // sigma_N = (1 + s^4)^(3/2) / (2 s): manifestly non-constant. The oracle
    // evaluates its spread over the window.
    double lo = 1e300, hi = 0.0;
    for (double s = 0.25; s <= 1.15; s += 0.01) {
      const double sig = std::pow(1.0 + s * s * s * s, 1.5) / (2.0 * s);
      lo = std::min(lo, sig);
      hi = std::max(hi, sig);
    }
    CHECK(hi - lo > 0.1);

    const GroupSpec g = GroupSpec::abelian();
    Profile p;
    p.kappa = [](double) { return 1.0; };
    p.tau = [&](double s) { return g.tau_g() + s * s; };
    p.s0 = 0.2;
    p.s1 = 1.2;
    p.h = 1e-3;
    const auto res = integrate_frenet(g, p);
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::Generic);
  }
  SUBCASE("geodesic") {
    const GroupSpec g = GroupSpec::su2();
    const auto res =
        integrate_frenet(g, constant_profile(0.0, g.tau_g(), 0.0, 1.0, 1e-3));
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::Geodesic);
  }
}

TEST_CASE("slant helix axis") {
  for (GroupKind kind : {GroupKind::Abelian, GroupKind::SU2}) {
    const GroupSpec g = GroupSpec::make(kind);
    const auto res = integrate_frenet(
        g, slant_helix_profile(g, 1.0, 1.0, -0.85, 0.85, 1e-3));
    const auto rep = classify(res.fd);
    REQUIRE(rep.classification == CurveClass::SlantHelix);
    const auto ax = axis(res.fd, rep);
    CHECK(ax.max_dev < 1e-3);
    CHECK(std::abs(ax.cos_theta - 1.0 / std::sqrt(2.0)) < 1e-3);
    for (double d : ax.n_dot_axis)
      CHECK(std::abs(d - 1.0 / std::sqrt(2.0)) < 1e-3);
  }
}

TEST_CASE("the constant-angle property fails off the slant class") {
  // On a generic curve the per-sample axis formula scatters, i.e. no fixed
  // direction keeps a constant angle with N.
  const GroupSpec g = GroupSpec::abelian();
  Profile p;
  p.kappa = [](double) { return 1.0; };
  p.tau = [](double s) { return s * s; };
  p.s0 = 0.2;
  p.s1 = 1.2;
  p.h = 1e-3;
  const auto res = integrate_frenet(g, p);
  const auto rep = classify(res.fd);
  REQUIRE(rep.classification == CurveClass::Generic);
  const auto ax = slant_axis(res.fd, rep.H, rep.Hprime, rep.sigma_stats.mean);
  CHECK(ax.max_dev > 1e-2);
  double spread_lo = 1e300, spread_hi = -1e300;
  for (double d : ax.n_dot_axis) {
    spread_lo = std::min(spread_lo, d);
    spread_hi = std::max(spread_hi, d);
  }
  CHECK(spread_hi - spread_lo > 1e-2);
}

TEST_CASE("axis requires a slant helix") {
  const GroupSpec g = GroupSpec::abelian();
  Profile p;
  p.kappa = [](double) { return 1.0; };
  p.tau = [](double s) { return s * s; };
  p.s0 = 0.2;
  p.s1 = 1.2;
  p.h = 1e-3;
  const auto res = integrate_frenet(g, p);
  const auto rep = classify(res.fd);
  REQUIRE(rep.classification == CurveClass::Generic);
  CHECK_THROWS_AS((void)axis(res.fd, rep), const Error&);
  try {
    (void)axis(res.fd, rep);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSlantHelix);
  }
}

TEST_CASE("general helix duality with the regression oracle") {
  // classify says GeneralHelix exactly when regressing (tau - tau_g) on
  // kappa leaves a small residual and reproduces the slope.
  const GroupSpec g = GroupSpec::so3();
  auto kappa = [](double s) { return 1.0 + 0.1 * std::sin(s); };

  SUBCASE("clean general helix") {
    const auto res = integrate_frenet(
        g, general_helix_profile(g, 0.7, kappa, 0.0, 2.0, 1e-3));
    const auto rep = classify(res.fd);
    CHECK(rep.classification == CurveClass::GeneralHelix);
    std::vector<double> x(res.fd.kappa), y(res.fd.size());
    for (long i = 0; i < res.fd.size(); ++i)
      y[i] = res.fd.tau[i] - res.fd.tau_g;
    const auto fit = oracles::fit_line(x, y);
    CHECK(std::abs(fit.slope - 0.7) < 1e-3);
    CHECK(fit.max_residual < 1e-6);
  }
  SUBCASE("perturbed torsion breaks both the verdict and the regression") {
    Profile p = general_helix_profile(g, 0.7, kappa, 0.0, 2.0, 1e-3);
    auto base_tau = p.tau;
    p.tau = [base_tau](double s) { return base_tau(s) + 0.05 * s; };
    const auto res = integrate_frenet(g, p);
    const auto rep = classify(res.fd);
    CHECK(rep.classification != CurveClass::GeneralHelix);
    std::vector<double> x(res.fd.kappa), y(res.fd.size());
    for (long i = 0; i < res.fd.size(); ++i)
      y[i] = res.fd.tau[i] - res.fd.tau_g;
    const auto fit = oracles::fit_line(x, y);
    CHECK(fit.max_residual > 1e-3);
  }
}

TEST_CASE("arc-length rescaling leaves H and sigma_N invariant") {
  const double lambda = 2.5;
  SUBCASE("abelian: literal geometric scaling") {
    // Scale the synthesized positions and the grid by lambda.
    const GroupSpec g = GroupSpec::abelian();
    const auto res = integrate_frenet(
        g, slant_helix_profile(g, 1.0, 1.0, -0.85, 0.85, 1e-3));
    SampledCurve scaled;
    scaled.group = g;
    scaled.s0 = res.curve.s0 * lambda;
    scaled.h = res.curve.h * lambda;
    for (const auto& p : res.curve.points)
      scaled.points.push_back(Vec3(lambda * std::get<Vec3>(p)));

    const auto fd0 = frenet_apparatus(res.curve);
    const auto fd1 = frenet_apparatus(scaled);
    const auto rep0 = classify(fd0);
    const auto rep1 = classify(fd1);
    CHECK(rep1.kappa_stats.mean ==
          doctest::Approx(rep0.kappa_stats.mean / lambda).epsilon(1e-6));
    CHECK(rep1.H_stats.mean ==
          doctest::Approx(rep0.H_stats.mean).epsilon(1e-6));
    CHECK(std::abs(rep1.sigma_stats.mean - rep0.sigma_stats.mean) < 1e-6);
  }
  SUBCASE("so3: profile-level scaling with tau_g fixed") {
    // Scaling the effective torsion (tau - tau_g) by 1/lambda together with
    // kappa gives a genuine curve of the same group; H and sigma_N must not
    // move.
    const GroupSpec g = GroupSpec::so3();
    const auto base = slant_helix_profile(g, 1.0, 1.0, -0.85, 0.85, 1e-3);
    Profile stretched;
    stretched.kappa = [&](double s) { return base.kappa(s / lambda) / lambda; };
    stretched.tau = [&, g](double s) {
      return (base.tau(s / lambda) - g.tau_g()) / lambda + g.tau_g();
    };
    stretched.s0 = base.s0 * lambda;
    stretched.s1 = base.s1 * lambda;
    stretched.h = base.h * lambda;

    const auto rep0 = classify(integrate_frenet(g, base).fd);
    const auto rep1 = classify(integrate_frenet(g, stretched).fd);
    CHECK(rep1.classification == CurveClass::SlantHelix);
    CHECK(std::abs(rep1.sigma_stats.mean - rep0.sigma_stats.mean) < 1e-6);
    CHECK(std::abs(rep1.theta - rep0.theta) < 1e-6);
  }
}
