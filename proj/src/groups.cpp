#include "groups.hpp"

#include <array>
#include <cmath>

namespace liecurve {

namespace {

Mat3 hat(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Vec3 vee(const Mat3& s) { return Vec3(s(2, 1), s(0, 2), s(1, 0)); }

Mat3 rodrigues(const Vec3& v) {
  const double angle = v.norm();
  if (angle < 1e-300) return Mat3::Identity();
  const Vec3 axis = v / angle;
  const Mat3 k = hat(axis);
  return Mat3::Identity() + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * (k * k);
}

Vec3 so3_log(const Mat3& r) {
  const Vec3 a = vee(0.5 * (r - r.transpose()));  // sin(theta) * axis
  const double s = a.norm();
  const double c = 0.5 * (r.trace() - 1.0);
  const double angle = std::atan2(s, c);
  if (s > 1e-9) return a * (angle / s);
  if (c > 0.0) return a;  // angle/s -> 1 as angle -> 0
  // Near a half turn: axis from the dominant column of R + I.
  const Mat3 m = r + Mat3::Identity();
  int j = 0;
  m.diagonal().maxCoeff(&j);
  Vec3 axis = m.col(j).normalized();
  if (axis.dot(a) < 0.0) axis = -axis;
  return axis * angle;
}

Quat su2_exp(const Vec3& v) {
  const double angle = v.norm();
  const double sinc =
      angle < 1e-8 ? 1.0 - angle * angle / 6.0 : std::sin(angle) / angle;
  return Quat(std::cos(angle), sinc * v.x(), sinc * v.y(), sinc * v.z());
}

Vec3 su2_log(const Quat& q) {
  const Vec3 u = q.vec();
  const double n = u.norm();
  const double angle = std::atan2(n, q.w());
  if (n > 1e-9) return u * (angle / n);
  if (q.w() < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "quaternion logarithm near the antipode is undefined");
  return u / q.w();
}

struct EdgeStencil {
  int first;  // offset of the first tap relative to the sample
  std::array<double, 5> w;
  int taps;
};

// One-sided first-derivative stencils (divided by h at the call site).
EdgeStencil edge_stencil(int order, long i, long n) {
  if (order == 2) {
    if (i == 0) return {0, {-1.5, 2.0, -0.5}, 3};
    return {-2, {0.5, -2.0, 1.5}, 3};
  }
  const double d = 1.0 / 12.0;
  if (i == 0) return {0, {-25 * d, 48 * d, -36 * d, 16 * d, -3 * d}, 5};
  if (i == 1) return {-1, {-3 * d, -10 * d, 18 * d, -6 * d, 1 * d}, 5};
  if (i == n - 2) return {-3, {-1 * d, 6 * d, -18 * d, 10 * d, 3 * d}, 5};
  return {-4, {3 * d, -16 * d, 36 * d, -48 * d, 25 * d}, 5};
}

// Ambient derivative at sample i, projected to the algebra.
Vec3 edge_body_velocity(const GroupSpec& g,
                        std::span<const GroupElement> points, double h,
                        int order, long i) {
  const long n = static_cast<long>(points.size());
  const EdgeStencil st = edge_stencil(order, i, n);
  switch (g.kind) {
    case GroupKind::Abelian: {
      Vec3 d = Vec3::Zero();
      for (int k = 0; k < st.taps; ++k)
        d += st.w[k] * std::get<Vec3>(points[i + st.first + k]);
      return d / h;
    }
    case GroupKind::SO3: {
      Mat3 d = Mat3::Zero();
      for (int k = 0; k < st.taps; ++k)
        d += st.w[k] * std::get<Mat3>(points[i + st.first + k]);
      d /= h;
      const Mat3 a = std::get<Mat3>(points[i]).transpose() * d;
      return vee(0.5 * (a - a.transpose()));
    }
    case GroupKind::SU2: {
      Eigen::Vector4d d = Eigen::Vector4d::Zero();
      for (int k = 0; k < st.taps; ++k) {
        const Quat& q = std::get<Quat>(points[i + st.first + k]);
        d += st.w[k] * Eigen::Vector4d(q.w(), q.x(), q.y(), q.z());
      }
      d /= h;
      const Quat dq(d[0], d[1], d[2], d[3]);
      return (std::get<Quat>(points[i]).conjugate() * dq).vec();
    }
  }
  return Vec3::Zero();
}

}  // namespace

const char* group_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Abelian: return "abelian";
    case GroupKind::SO3: return "so3";
    case GroupKind::SU2: return "su2";
  }
  return "?";
}

GroupKind group_from_name(const std::string& name) {
  if (name == "abelian") return GroupKind::Abelian;
  if (name == "so3") return GroupKind::SO3;
  if (name == "su2") return GroupKind::SU2;
  throw Error(ErrorCode::InvalidArgument,
              "unknown group '" + name + "' (expected abelian, so3 or su2)");
}

GroupSpec GroupSpec::make(GroupKind kind) {
  switch (kind) {
    case GroupKind::Abelian: return {kind, 0.0};
    case GroupKind::SO3: return {kind, 1.0};
    case GroupKind::SU2: return {kind, 2.0};
  }
  return {};
}

GroupElement group_identity(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Abelian: return Vec3(Vec3::Zero());
    case GroupKind::SO3: return Mat3(Mat3::Identity());
    case GroupKind::SU2: return Quat(Quat::Identity());
  }
  return Vec3(Vec3::Zero());
}

Vec3 bracket(const GroupSpec& g, const Vec3& v, const Vec3& w) {
  return g.c * v.cross(w);
}

double inner(const Vec3& v, const Vec3& w) { return v.dot(w); }

Vec3 covariant_rate(const GroupSpec& g, const Vec3& T, const Vec3& W,
                    const Vec3& Wdot) {
  return Wdot + 0.5 * bracket(g, T, W);
}

GroupElement group_exp(const GroupSpec& g, const Vec3& v) {
  switch (g.kind) {
    case GroupKind::Abelian: return v;
    case GroupKind::SO3: return rodrigues(v);
    case GroupKind::SU2: return su2_exp(v);
  }
  return v;
}

GroupElement compose(const GroupSpec& g, const GroupElement& p,
                     const GroupElement& q) {
  switch (g.kind) {
    case GroupKind::Abelian:
      return Vec3(std::get<Vec3>(p) + std::get<Vec3>(q));
    case GroupKind::SO3: return Mat3(std::get<Mat3>(p) * std::get<Mat3>(q));
    case GroupKind::SU2: return Quat(std::get<Quat>(p) * std::get<Quat>(q));
  }
  return p;
}

GroupElement inverse(const GroupSpec& g, const GroupElement& p) {
  switch (g.kind) {
    case GroupKind::Abelian: return Vec3(-std::get<Vec3>(p));
    case GroupKind::SO3: return Mat3(std::get<Mat3>(p).transpose());
    case GroupKind::SU2: return Quat(std::get<Quat>(p).conjugate());
  }
  return p;
}

Vec3 relative_log(const GroupSpec& g, const GroupElement& p,
                  const GroupElement& q) {
  switch (g.kind) {
    case GroupKind::Abelian: return std::get<Vec3>(q) - std::get<Vec3>(p);
    case GroupKind::SO3:
      return so3_log(std::get<Mat3>(p).transpose() * std::get<Mat3>(q));
    case GroupKind::SU2:
      return su2_log(std::get<Quat>(p).conjugate() * std::get<Quat>(q));
  }
  return Vec3::Zero();
}

GroupElement renormalized(const GroupSpec& g, const GroupElement& p) {
  switch (g.kind) {
    case GroupKind::Abelian: return p;
    case GroupKind::SO3: {
      Mat3 r = std::get<Mat3>(p);
      Vec3 c0 = r.col(0).normalized();
      Vec3 c1 = (r.col(1) - c0.dot(r.col(1)) * c0).normalized();
      Vec3 c2 = c0.cross(c1);
      Mat3 out;
      out.col(0) = c0;
      out.col(1) = c1;
      out.col(2) = c2;
      return out;
    }
    case GroupKind::SU2: {
      Quat q = std::get<Quat>(p);
      q.normalize();
      return q;
    }
  }
  return p;
}

double element_defect(const GroupSpec& g, const GroupElement& p) {
  switch (g.kind) {
    case GroupKind::Abelian: return 0.0;
    case GroupKind::SO3: {
      const Mat3& r = std::get<Mat3>(p);
      double defect = (r.transpose() * r - Mat3::Identity()).norm();
      if (r.determinant() <= 0.0) defect = std::max(defect, 1.0);
      return defect;
    }
    case GroupKind::SU2: return std::abs(std::get<Quat>(p).norm() - 1.0);
  }
  return 0.0;
}

GroupElement advance(const GroupSpec& g, const GroupElement& p, const Vec3& v,
                     double h) {
  return renormalized(g, compose(g, p, group_exp(g, h * v)));
}

std::vector<Vec3> body_velocity(const GroupSpec& g,
                                std::span<const GroupElement> points, double h,
                                int fd_order, double unit_speed_tol) {
  if (fd_order != 2 && fd_order != 4)
    throw Error(ErrorCode::InvalidArgument, "fd order must be 2 or 4");
  const long n = static_cast<long>(points.size());
  const long margin = fd_order == 4 ? 2 : 1;
  if (n < 2 * margin + 1)
    throw Error(ErrorCode::InsufficientSamples,
                "too few samples for body velocity estimation");

  std::vector<Vec3> t(n);
  for (long i = 0; i < n; ++i) {
    if (i < margin || i >= n - margin) {
      t[i] = edge_body_velocity(g, points, h, fd_order, i);
      continue;
    }
    const Vec3 fwd1 = relative_log(g, points[i], points[i + 1]);
    const Vec3 bwd1 = relative_log(g, points[i], points[i - 1]);
    if (fd_order == 2) {
      t[i] = (fwd1 - bwd1) / (2.0 * h);
    } else {
      const Vec3 fwd2 = relative_log(g, points[i], points[i + 2]);
      const Vec3 bwd2 = relative_log(g, points[i], points[i - 2]);
      t[i] = (8.0 * (fwd1 - bwd1) - (fwd2 - bwd2)) / (12.0 * h);
    }
  }

  double max_dev = 0.0;
  for (long i = margin; i < n - margin; ++i)
    max_dev = std::max(max_dev, std::abs(t[i].norm() - 1.0));
  if (max_dev > unit_speed_tol)
    throw Error(ErrorCode::NonUnitSpeed,
                "curve is not arc-length parametrized: max | |T| - 1 | = " +
                    std::to_string(max_dev));
  return t;
}

}  // namespace liecurve
