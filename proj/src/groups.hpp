#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace liecurve {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

enum class GroupKind { Abelian, SO3, SU2 };

const char* group_name(GroupKind kind);
GroupKind group_from_name(const std::string& name);

/// One of the three 3-d Lie groups carrying a bi-invariant metric, in the
/// orthonormal algebra basis where the bracket is c * cross:
///   Abelian: c = 0,  SO(3): c = 1,  SU(2): c = 2.
/// This normalization pins the group torsion to tau_G = c/2 (0, 1/2, 1).
struct GroupSpec {
  GroupKind kind = GroupKind::Abelian;
  double c = 0.0;

  static GroupSpec make(GroupKind kind);
  static GroupSpec abelian() { return make(GroupKind::Abelian); }
  static GroupSpec so3() { return make(GroupKind::SO3); }
  static GroupSpec su2() { return make(GroupKind::SU2); }

  double tau_g() const { return 0.5 * c; }
  const char* name() const { return group_name(kind); }
};

/// Group point: translation vector, rotation matrix, or unit quaternion.
using GroupElement = std::variant<Vec3, Mat3, Quat>;

GroupElement group_identity(const GroupSpec& g);

/// Lie bracket [v, w] = c * (v x w).
Vec3 bracket(const GroupSpec& g, const Vec3& v, const Vec3& w);

/// Bi-invariant metric restricted to the algebra (Euclidean in this basis).
double inner(const Vec3& v, const Vec3& w);

/// Covariant derivative along the curve of a field W with component
/// derivative Wdot: D W = Wdot + (1/2)[T, W].
Vec3 covariant_rate(const GroupSpec& g, const Vec3& T, const Vec3& W,
                    const Vec3& Wdot);

/// Closed-form group exponential of an algebra vector.
/// SU(2) uses exp(v) = (cos|v|, vhat sin|v|), matching the c = 2 bracket
/// normalization (so one-parameter subgroups are unit speed).
GroupElement group_exp(const GroupSpec& g, const Vec3& v);

/// Logarithm of the displacement p^-1 q. Assumes q is within the injectivity
/// radius of p (always the case for neighbouring curve samples).
Vec3 relative_log(const GroupSpec& g, const GroupElement& p,
                  const GroupElement& q);

GroupElement compose(const GroupSpec& g, const GroupElement& p,
                     const GroupElement& q);
GroupElement inverse(const GroupSpec& g, const GroupElement& p);

/// Project back onto the group (Gram-Schmidt for SO(3), renormalize for
/// SU(2)). Abelian elements pass through.
GroupElement renormalized(const GroupSpec& g, const GroupElement& p);

/// Distance of p from satisfying the group-element invariants
/// (orthogonality defect for SO(3), | |q| - 1 | for SU(2), 0 for Abelian).
double element_defect(const GroupSpec& g, const GroupElement& p);

/// One step p * exp(h v), renormalized.
GroupElement advance(const GroupSpec& g, const GroupElement& p, const Vec3& v,
                     double h);

/// Body velocity T(s) of a uniformly sampled curve: the pullback of the
/// velocity to the algebra by left translation. Interior samples use central
/// differences of group logarithms of p(s)^-1 p(s +/- kh); the outermost two
/// samples per side use one-sided ambient stencils projected to the algebra.
/// Throws NonUnitSpeed if | |T| - 1 | > unit_speed_tol at an interior sample.
std::vector<Vec3> body_velocity(const GroupSpec& g,
                                std::span<const GroupElement> points, double h,
                                int fd_order, double unit_speed_tol);

}  // namespace liecurve
