#include "wavebound/schemes2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavebound/errors.hpp"
#include "wavebound/parallel.hpp"

namespace wavebound {

double Field2D::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double Field2D::min() const { return *std::min_element(data_.begin(), data_.end()); }

double Field2D::max() const { return *std::max_element(data_.begin(), data_.end()); }

Field2D Field2D::transposed() const {
  Field2D t(ny_, nx_);
  for (std::size_t j = 0; j < ny_; ++j)
    for (std::size_t i = 0; i < nx_; ++i)
      t(j, i) = (*this)(i, j);
  return t;
}

void validate(const Advection2DSpec &spec) {
  const auto ok = [](double v) { return v >= 0.0 && std::isfinite(v); };
  if (!ok(spec.lambda_x) || !ok(spec.lambda_y))
    throw InvalidArgument("2D advection assumes lambda_x, lambda_y >= 0");
  if (!ok(spec.beta_x) || !ok(spec.beta_y))
    throw InvalidArgument("beta_x, beta_y must be non-negative");
  if (!ok(spec.cx) || !ok(spec.cy))
    throw InvalidArgument("Courant numbers must be non-negative");
}

SchemeCoefficients2D coefficients_2d(const Advection2DSpec &spec) {
  validate(spec);
  const double bx = spec.beta_x, by = spec.beta_y, cx = spec.cx, cy = spec.cy;
  return {0.5 * (1.0 + bx) * cx, 1.0 - bx * cx - by * cy, 0.5 * (-1.0 + bx) * cx,
          0.5 * (1.0 + by) * cy, 0.5 * (-1.0 + by) * cy};
}

SchemeCoefficients2D coefficients_2d(const BetaSpec &beta_x, const BetaSpec &beta_y, double cx,
                                     double cy) {
  if (!(cx >= 0.0) || !(cy >= 0.0))
    throw InvalidArgument("Courant numbers must be non-negative");
  const double dx = beta_x.viscosity(cx);
  const double dy = beta_y.viscosity(cy);
  return {0.5 * (dx + cx), 1.0 - dx - dy, 0.5 * (dx - cx), 0.5 * (dy + cy), 0.5 * (dy - cy)};
}

bool is_monotone_2d(const SchemeCoefficients2D &c) {
  constexpr double slack = -1e-14;
  return c.g_m1 >= slack && c.g_0 >= slack && c.g_p1 >= slack && c.d_m1 >= slack &&
         c.d_p1 >= slack;
}

bool is_monotone_2d(const Advection2DSpec &spec) { return is_monotone_2d(coefficients_2d(spec)); }

void step_2d(const Field2D &q, const SchemeCoefficients2D &c, Field2D &out) {
  const std::size_t nx = q.nx(), ny = q.ny();
  if (out.nx() != nx || out.ny() != ny)
    out = Field2D(nx, ny);
  if (nx == 0 || ny == 0)
    return;
  const double *in = q.data().data();
  double *res = out.data().data();
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(ny);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (nx * ny > 4096)
  for (std::ptrdiff_t jj = 0; jj < rows; ++jj) {
    const std::size_t j = static_cast<std::size_t>(jj);
    const double *row = in + j * nx;
    const double *south = in + ((j + ny - 1) % ny) * nx;
    const double *north = in + ((j + 1) % ny) * nx;
    double *dst = res + j * nx;
    const auto cell = [&](std::size_t i, std::size_t w, std::size_t e) {
      dst[i] = c.g_m1 * row[w] + c.g_0 * row[i] + c.g_p1 * row[e] + c.d_m1 * south[i] +
               c.d_p1 * north[i];
    };
    cell(0, nx - 1, nx > 1 ? 1 : 0);
    for (std::size_t i = 1; i + 1 < nx; ++i)
      cell(i, i - 1, i + 1);
    if (nx > 1)
      cell(nx - 1, nx - 2, 0);
  }
}

Field2D step_2d(const Field2D &q, const SchemeCoefficients2D &coeffs) {
  Field2D out(q.nx(), q.ny());
  step_2d(q, coeffs, out);
  return out;
}

} // namespace wavebound
