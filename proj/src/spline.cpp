#include "spline.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace liecurve {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const long n = static_cast<long>(x_.size());
  if (n < 2 || y_.size() != x_.size())
    throw Error(ErrorCode::InvalidArgument,
                "spline needs at least two matching samples");
  for (long i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i]))
      throw Error(ErrorCode::InvalidArgument,
                  "spline abscissae must be strictly increasing");

  m_.assign(n, 0.0);
  if (n == 2) return;

  std::vector<double> h(n - 1);
  for (long i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  if (n == 3) {
    // Single parabola through the three points.
    const double dd = ((y_[2] - y_[1]) / h[1] - (y_[1] - y_[0]) / h[0]) /
                      (h[0] + h[1]);
    m_.assign(3, 2.0 * dd);
    return;
  }

  // Tridiagonal system for the interior moments M_1 .. M_{n-2} with
  // not-a-knot corner rows folded in.
  const long m = n - 2;
  std::vector<double> lo(m, 0.0), di(m, 0.0), up(m, 0.0), rhs(m, 0.0);
  for (long i = 1; i <= n - 2; ++i)
    rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] -
                        (y_[i] - y_[i - 1]) / h[i - 1]);
  for (long i = 2; i <= n - 3; ++i) {
    lo[i - 1] = h[i - 1];
    di[i - 1] = 2.0 * (h[i - 1] + h[i]);
    up[i - 1] = h[i];
  }
  {
    const double r = h[0] / h[1];
    di[0] = h[0] * (1.0 + r) + 2.0 * (h[0] + h[1]);
    up[0] = h[1] - h[0] * r;
  }
  {
    const double r = h[n - 2] / h[n - 3];
    lo[m - 1] = h[n - 3] - h[n - 2] * r;
    di[m - 1] = 2.0 * (h[n - 3] + h[n - 2]) + h[n - 2] * (1.0 + r);
  }

  // Thomas solve.
  for (long i = 1; i < m; ++i) {
    const double f = lo[i] / di[i - 1];
    di[i] -= f * up[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  std::vector<double> sol(m);
  sol[m - 1] = rhs[m - 1] / di[m - 1];
  for (long i = m - 2; i >= 0; --i)
    sol[i] = (rhs[i] - up[i] * sol[i + 1]) / di[i];

  for (long i = 0; i < m; ++i) m_[i + 1] = sol[i];
  m_[0] = m_[1] * (1.0 + h[0] / h[1]) - m_[2] * (h[0] / h[1]);
  m_[n - 1] = m_[n - 2] * (1.0 + h[n - 2] / h[n - 3]) -
              m_[n - 3] * (h[n - 2] / h[n - 3]);
}

long CubicSpline::interval(double x) const {
  const long n = static_cast<long>(x_.size());
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  long i = static_cast<long>(it - x_.begin()) - 1;
  return std::clamp(i, 0L, n - 2);
}

double CubicSpline::operator()(double x) const {
  const long i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double a = x_[i + 1] - x;
  const double b = x - x_[i];
  return m_[i] * a * a * a / (6.0 * h) + m_[i + 1] * b * b * b / (6.0 * h) +
         (y_[i] - m_[i] * h * h / 6.0) * a / h +
         (y_[i + 1] - m_[i + 1] * h * h / 6.0) * b / h;
}

double CubicSpline::derivative(double x) const {
  const long i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double a = x_[i + 1] - x;
  const double b = x - x_[i];
  return -m_[i] * a * a / (2.0 * h) + m_[i + 1] * b * b / (2.0 * h) +
         (y_[i + 1] - y_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

std::vector<double> cumulative_trapezoid(std::span<const double> y, double h) {
  std::vector<double> out(y.size(), 0.0);
  for (size_t i = 1; i < y.size(); ++i)
    out[i] = out[i - 1] + 0.5 * h * (y[i - 1] + y[i]);
  return out;
}

}  // namespace liecurve
