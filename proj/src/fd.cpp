#include "fd.hpp"

#include <array>

#include "errors.hpp"

namespace liecurve {

namespace {

struct Stencil {
  int first;
  std::array<double, 5> w;
  int taps;
};

Stencil stencil_at(int order, long i, long n) {
  if (order == 2) {
    if (i == 0) return {0, {-1.5, 2.0, -0.5}, 3};
    if (i == n - 1) return {-2, {0.5, -2.0, 1.5}, 3};
    return {-1, {-0.5, 0.0, 0.5}, 3};
  }
  const double d = 1.0 / 12.0;
  if (i == 0) return {0, {-25 * d, 48 * d, -36 * d, 16 * d, -3 * d}, 5};
  if (i == 1) return {-1, {-3 * d, -10 * d, 18 * d, -6 * d, 1 * d}, 5};
  if (i == n - 2) return {-3, {-1 * d, 6 * d, -18 * d, 10 * d, 3 * d}, 5};
  if (i == n - 1) return {-4, {3 * d, -16 * d, 36 * d, -48 * d, 25 * d}, 5};
  return {-2, {1 * d, -8 * d, 0.0, 8 * d, -1 * d}, 5};
}

template <typename T>
std::vector<T> derive(std::span<const T> y, double h, int order, T zero) {
  if (order != 2 && order != 4)
    throw Error(ErrorCode::InvalidArgument, "fd order must be 2 or 4");
  const long n = static_cast<long>(y.size());
  const long need = order == 4 ? 5 : 3;
  if (n < need)
    throw Error(ErrorCode::InsufficientSamples,
                "too few samples for finite differencing");
  std::vector<T> out(n, zero);
  for (long i = 0; i < n; ++i) {
    const Stencil st = stencil_at(order, i, n);
    T acc = zero;
    for (int k = 0; k < st.taps; ++k) acc += st.w[k] * y[i + st.first + k];
    out[i] = acc / h;
  }
  return out;
}

}  // namespace

std::vector<double> fd_derivative(std::span<const double> y, double h,
                                  int order) {
  return derive(y, h, order, 0.0);
}

std::vector<Vec3> fd_derivative(std::span<const Vec3> y, double h, int order) {
  return derive(y, h, order, Vec3(Vec3::Zero()));
}

}  // namespace liecurve
