#pragma once

#include <span>
#include <vector>

#include "groups.hpp"

namespace liecurve {

/// First derivative of a uniformly sampled sequence. Interior points use
/// central stencils of the requested order (2 or 4); the outermost points use
/// one-sided stencils of matching order.
std::vector<double> fd_derivative(std::span<const double> y, double h,
                                  int order);
std::vector<Vec3> fd_derivative(std::span<const Vec3> y, double h, int order);

/// Minimum sample count accepted by the differentiation pipelines
/// (two endpoint stencils per side plus seven interior samples).
inline constexpr long kMinSamples = 9;

}  // namespace liecurve
