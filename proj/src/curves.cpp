#include "curves.hpp"

#include <cmath>

#include "spline.hpp"

namespace liecurve {

namespace {

std::vector<double> uniform_grid(double s0, double h, long n) {
  std::vector<double> s(n);
  for (long i = 0; i < n; ++i) s[i] = s0 + static_cast<double>(i) * h;
  return s;
}

std::vector<double> element_coords(const GroupSpec& g, const GroupElement& p) {
  switch (g.kind) {
    case GroupKind::Abelian: {
      const Vec3& v = std::get<Vec3>(p);
      return {v.x(), v.y(), v.z()};
    }
    case GroupKind::SO3: {
      const Mat3& r = std::get<Mat3>(p);
      std::vector<double> out(9);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[3 * i + j] = r(i, j);
      return out;
    }
    case GroupKind::SU2: {
      const Quat& q = std::get<Quat>(p);
      return {q.w(), q.x(), q.y(), q.z()};
    }
  }
  return {};
}

GroupElement element_from_coords(const GroupSpec& g,
                                 const std::vector<double>& c) {
  switch (g.kind) {
    case GroupKind::Abelian: return Vec3(c[0], c[1], c[2]);
    case GroupKind::SO3: {
      Mat3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = c[3 * i + j];
      return r;
    }
    case GroupKind::SU2: return Quat(c[0], c[1], c[2], c[3]);
  }
  return Vec3(Vec3::Zero());
}

}  // namespace

std::vector<double> SampledCurve::grid() const {
  return uniform_grid(s0, h, size());
}

std::vector<double> AlgebraCurve::grid() const {
  return uniform_grid(s0, h, size());
}

bool fit_uniform_grid(const std::vector<double>& s, double* s0, double* h) {
  const long n = static_cast<long>(s.size());
  if (n < 2) return false;
  const double step = (s.back() - s.front()) / static_cast<double>(n - 1);
  if (!(step > 0.0)) return false;
  double max_dev = 0.0;
  for (long i = 0; i < n; ++i)
    max_dev = std::max(max_dev,
                       std::abs(s[i] - (s.front() + step * double(i))));
  if (max_dev > 1e-6 * step) return false;
  *s0 = s.front();
  *h = step;
  return true;
}

SampledCurve resample_uniform(const GroupSpec& g, const std::vector<double>& s,
                              const std::vector<GroupElement>& points) {
  const long n = static_cast<long>(s.size());
  const long dim = static_cast<long>(element_coords(g, points[0]).size());
  std::vector<std::vector<double>> comp(dim, std::vector<double>(n));
  for (long i = 0; i < n; ++i) {
    const auto c = element_coords(g, points[i]);
    for (long d = 0; d < dim; ++d) comp[d][i] = c[d];
  }
  std::vector<CubicSpline> splines;
  splines.reserve(dim);
  for (long d = 0; d < dim; ++d) splines.emplace_back(s, comp[d]);

  SampledCurve out;
  out.group = g;
  out.s0 = s.front();
  out.h = (s.back() - s.front()) / static_cast<double>(n - 1);
  out.points.resize(n);
  std::vector<double> c(dim);
  for (long i = 0; i < n; ++i) {
    const double si = out.s(i);
    for (long d = 0; d < dim; ++d) c[d] = splines[d](si);
    out.points[i] = renormalized(g, element_from_coords(g, c));
  }
  return out;
}

}  // namespace liecurve
