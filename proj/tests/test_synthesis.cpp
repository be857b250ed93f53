#include <doctest.h>

#include <cmath>

#include "frenet.hpp"
#include "invariants.hpp"
#include "oracles.hpp"
#include "synthesis.hpp"

using namespace liecurve;

namespace {

SampledCurve decimate(const SampledCurve& c, long k) {
  SampledCurve out;
  out.group = c.group;
  out.s0 = c.s0;
  out.h = c.h * double(k);
  for (long i = 0; i < c.size(); i += k) out.points.push_back(c.points[i]);
  return out;
}

double roundtrip_error(const SynthesisResult& res, const FrenetData& fd) {
  const long n = fd.size();
  const long drop = n / 20;
  double err = 0.0;
  for (long i = drop; i < n - drop; ++i) {
    err = std::max(err, std::abs(fd.kappa[i] - res.fd.kappa[i]));
    err = std::max(err, std::abs(fd.tau[i] - res.fd.tau[i]));
  }
  return err;
}

}  // namespace

TEST_CASE("geodesics are one-parameter subgroups") {
  for (GroupKind kind : {GroupKind::Abelian, GroupKind::SO3, GroupKind::SU2}) {
    const GroupSpec g = GroupSpec::make(kind);
    const auto res =
        integrate_frenet(g, constant_profile(0.0, 0.3, 0.0, 1.0, 1e-3));
    for (long i = 0; i < res.curve.size(); ++i) {
      // closed form exp(s X1), since the initial frame has T = X1
      const GroupElement expected =
          group_exp(g, res.curve.s(i) * Vec3::UnitX());
      const double dist =
          relative_log(g, expected, res.curve.points[i]).norm();
      CHECK(dist < 1e-9);
    }
  }
}

TEST_CASE("round trip on the circular helix profile") {
  for (GroupKind kind : {GroupKind::Abelian, GroupKind::SO3, GroupKind::SU2}) {
    const GroupSpec g = GroupSpec::make(kind);
    const auto res =
        integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 2.0, 1e-3));
    const FrenetData fd = frenet_apparatus(res.curve);
    CHECK(roundtrip_error(res, fd) < 1e-5);
    CHECK(fd.max_unit_speed_dev < 1e-6);
  }
}

TEST_CASE("abelian circular profile reproduces the helix closed forms") {
  // kappa = tau = 1/2 corresponds to a = b = 1 up to rigid motion.
  CHECK(oracles::helix_kappa(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(oracles::helix_tau(1.0, 1.0) == doctest::Approx(0.5));
  const GroupSpec g = GroupSpec::abelian();
  const auto res =
      integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 2.0, 1e-3));
  const FrenetData fd = frenet_apparatus(res.curve);
  const long n = fd.size();
  for (long i = n / 20; i < n - n / 20; ++i) {
    CHECK(std::abs(fd.kappa[i] - 0.5) < 1e-6);
    CHECK(std::abs(fd.tau[i] - 0.5) < 1e-6);
  }
}

TEST_CASE("su2 H = 0 family") {
  const GroupSpec g = GroupSpec::su2();
  const auto res =
      integrate_frenet(g, constant_profile(1.0, 1.0, 0.0, 2.0, 1e-3));
  const FrenetData fd = frenet_apparatus(res.curve);
  CHECK(fd.tau_g == doctest::Approx(1.0));
  const auto hc = harmonic_curvature(fd);
  const long n = fd.size();
  for (long i = n / 20; i < n - n / 20; ++i) CHECK(std::abs(hc.H[i]) < 1e-6);
}

TEST_CASE("slant helix profile closed form") {
  const GroupSpec g = GroupSpec::abelian();
  const Profile p = slant_helix_profile(g, 1.0, 1.0, -0.9, 0.9, 1e-3);

  SUBCASE("H(0.6) = 0.75 against the ODE oracle") {
    // Oracle: integrate H' = kappa (1 + H^2)^(3/2) / m from H(0) = 0.
    const double h_oracle = oracles::rk4_scalar(
        [](double, double y) { return std::pow(1.0 + y * y, 1.5); }, 0.0, 0.0,
        0.6, 4000);
    const double h_closed = p.tau(0.6) - g.tau_g();  // kappa0 = 1
    CHECK(std::abs(h_closed - h_oracle) < 1e-8);
    CHECK(h_closed == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(p.tau(0.0) == doctest::Approx(g.tau_g()));
  }

  SUBCASE("su2 shifts tau by tau_g = 1") {
    const Profile q =
        slant_helix_profile(GroupSpec::su2(), 1.0, 1.0, -0.9, 0.9, 1e-3);
    CHECK(q.tau(0.0) == doctest::Approx(1.0));
  }

  SUBCASE("domain guard") {
    CHECK_THROWS_AS(
        (void)slant_helix_profile(g, 1.0, 1.0, -0.99, 0.99, 1e-3),
        const Error&);
    try {
      (void)slant_helix_profile(g, 1.0, 1.0, -0.99, 0.99, 1e-3);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainExceedsSingularity);
    }
  }
}

TEST_CASE("slant verdict with theta = pi/4") {
  for (GroupKind kind : {GroupKind::Abelian, GroupKind::SO3, GroupKind::SU2}) {
    const GroupSpec g = GroupSpec::make(kind);
    const auto res = integrate_frenet(
        g, slant_helix_profile(g, 1.0, 1.0, -0.85, 0.85, 1e-3));
    const auto rep = classify(frenet_apparatus(res.curve));
    REQUIRE(rep.classification == CurveClass::SlantHelix);
    CHECK(std::abs(rep.theta - M_PI / 4.0) < 1e-3);
  }
}

TEST_CASE("general helix profiles") {
  SUBCASE("slope zero in the abelian group is a plane profile") {
    const auto p = general_helix_profile(
        GroupSpec::abelian(), 0.0, [](double) { return 1.0; }, 0.0, 1.0, 1e-3);
    CHECK(p.tau(0.3) == doctest::Approx(0.0));
  }
  SUBCASE("slope zero in su2 gives tau = 1") {
    const auto p = general_helix_profile(
        GroupSpec::su2(), 0.0, [](double) { return 1.0; }, 0.0, 1.0, 1e-3);
    CHECK(p.tau(0.3) == doctest::Approx(1.0));
  }
  SUBCASE("round trip recovers the slope") {
    const GroupSpec g = GroupSpec::abelian();
    const auto res = integrate_frenet(
        g, general_helix_profile(
               g, 0.7, [](double s) { return 1.0 + 0.1 * std::sin(s); }, 0.0,
               2.0, 1e-3));
    const auto rep = classify(frenet_apparatus(res.curve));
    CHECK(rep.classification == CurveClass::GeneralHelix);
    CHECK(std::abs(rep.general_slope - 0.7) < 1e-3);
  }
}

TEST_CASE("frame stays orthonormal over ten thousand steps") {
  const GroupSpec g = GroupSpec::su2();
  const auto res =
      integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 10.0, 1e-3));
  REQUIRE(res.fd.size() == 10001);
  for (long i = 0; i < res.fd.size(); ++i) {
    CHECK(std::abs(res.fd.T[i].norm() - 1.0) < 1e-9);
    CHECK(std::abs(res.fd.N[i].norm() - 1.0) < 1e-9);
    CHECK(std::abs(res.fd.T[i].dot(res.fd.N[i])) < 1e-9);
    CHECK((res.fd.T[i].cross(res.fd.N[i]) - res.fd.B[i]).norm() < 1e-9);
  }
  CHECK(element_defect(g, res.curve.points.back()) < 1e-12);
}

TEST_CASE("fourth-order convergence of the recovery") {
  // Truncation at desk-scale steps sits below the FD rounding floor, so the
  // convergence of the analysis is demonstrated by sampling the same
  // synthesized curve at h and h/2.
  auto recovery_error = [](const SampledCurve& c) {
    const FrenetData fd = frenet_apparatus(c);
    const long n = fd.size();
    double err = 0.0;
    for (long i = n / 20; i < n - n / 20; ++i) {
      err = std::max(err, std::abs(fd.kappa[i] - 0.5));
      err = std::max(err, std::abs(fd.tau[i] - 0.5));
    }
    return err;
  };
  for (GroupKind kind : {GroupKind::Abelian, GroupKind::SO3, GroupKind::SU2}) {
    const GroupSpec g = GroupSpec::make(kind);
    const auto res =
        integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 2.0, 1e-3));
    const double coarse = recovery_error(decimate(res.curve, 20));
    const double fine = recovery_error(decimate(res.curve, 10));
    CHECK(coarse / fine > 10.0);
  }
}

TEST_CASE("integration preconditions") {
  const GroupSpec g = GroupSpec::abelian();
  SUBCASE("step cap") {
    CHECK_THROWS_AS(
        (void)integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 1.0, 2e-2)),
        const Error&);
  }
  SUBCASE("frame must be orthonormal") {
    FrameState frame;
    frame.N = Vec3(0.5, 0.5, 0.0);
    CHECK_THROWS_AS(
        (void)integrate_frenet(g, constant_profile(0.5, 0.5, 0.0, 1.0, 1e-3),
                               group_identity(g), frame),
        const Error&);
  }
}
