#pragma once

#include <limits>
#include <optional>

#include "frenet.hpp"
#include "invariants.hpp"

namespace liecurve {

enum class DerivedKind { Tangent, Normal, Binormal, Involute };
const char* derived_kind_name(DerivedKind k);

struct DerivedOptions {
  FrenetOptions frenet;
  ConstancyTolerances tol;
  double vanishing_h = 1e-6;  // binormal |H| floor

  // The derived torsion sits five finite-difference stages above the source
  // positions; on fine grids its eps/h^5 rounding floor dominates long
  // before truncation matters. The measured apparatus therefore runs on a
  // fixed-stride subsample whose derived-arc step is roughly eval_step.
  // Rate and orthogonality profiles stay on the full grid.
  //
  // The balance differs per kind: the normal indicatrix inherits frame noise
  // along the source binormal, exactly the out-of-plane direction its
  // torsion measures, so it runs coarser; the binormal indicatrix has large
  // truncation constants near small |H| and runs finer.
  double eval_step = 5e-3;
  double normal_eval_step = 1e-2;
  double binormal_eval_step = 3e-3;
};

struct DerivedCurveResult {
  DerivedKind kind = DerivedKind::Tangent;
  GroupSpec source_group;

  /// Indicatrices: the unit-sphere curve on its arc-length grid.
  /// Involute: the frame-level tangent samples T_x on the source grid.
  AlgebraCurve curve;
  /// Abelian involute only: the literal point curve x = alpha + (c - s) T.
  std::optional<AlgebraCurve> literal_curve;

  FrenetData fd;                      // measured apparatus of the derived curve
  InvariantReport verdict;            // classification of the derived curve

  std::vector<double> kappa_pred, tau_pred;  // on the fd grid; may be empty
  double tau_g_pred = 0.0;
  // NaN when the corresponding comparison was not available
  double max_kappa_delta = std::numeric_limits<double>::quiet_NaN();
  double max_tau_delta = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> rate_measured, rate_pred;  // ds*/ds on the source grid
  double max_rate_delta = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> t_inner;  // <T_alpha, T_derived> at matched samples
  double max_t_inner = 0.0;

  // Involute extras.
  double involute_c = 0.0;
  std::vector<double> psi;  // derived arc length at the source samples
  std::vector<std::vector<double>> embedding;  // ambient polyline, vis only

  // Binormal windows (source index range and the sign of kappa H).
  long window_begin = 0, window_end = 0;
  double epsilon = 1.0;
};

/// Tangent indicatrix beta(s*) = T(s), ds*/ds = kappa. The derived frame on
/// the sphere is a general helix exactly when alpha is a slant helix.
DerivedCurveResult tangent_indicatrix(const FrenetData& fd_alpha,
                                      const DerivedOptions& opt = {});

/// Normal indicatrix gamma(s*) = N(s), ds*/ds = kappa sqrt(1 + H^2). Its
/// torsion is reported without the bracket shift (plain vector-space
/// torsion), matching the determinant-formula convention under which the
/// indicatrix of a slant helix is a plane curve.
DerivedCurveResult normal_indicatrix(const FrenetData& fd_alpha,
                                     const DerivedOptions& opt = {});

/// Binormal indicatrix delta(s*) = B(s), ds*/ds = eps kappa H. The curve is
/// split at sign changes of H; one result per sign-definite window. Throws
/// VanishingH when no window survives the |H| > vanishing_h mask.
std::vector<DerivedCurveResult> binormal_indicatrix(
    const FrenetData& fd_alpha, const DerivedOptions& opt = {});

/// Involute x(s) = alpha(s) + (c - s) T(s) with arc rate psi' = (c - s) kappa.
/// All groups get the frame-level apparatus (T_x = N along psi); the abelian
/// group additionally produces and analyzes the literal point curve, and the
/// non-abelian groups emit an ambient-embedding polyline for visualization
/// only. Throws CuspInRange when c comes within one grid step of the domain.
DerivedCurveResult involute(const SampledCurve& curve,
                            const FrenetData& fd_alpha, double c,
                            const DerivedOptions& opt = {});

}  // namespace liecurve
