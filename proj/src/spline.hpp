#pragma once

#include <span>
#include <vector>

namespace liecurve {

/// Not-a-knot cubic spline through (x_i, y_i) with strictly increasing x.
/// Evaluation outside [x_front, x_back] extends the boundary polynomial.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

 private:
  long interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

/// Cumulative trapezoid integral of y over a uniform grid of step h;
/// result[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> y, double h);

}  // namespace liecurve
