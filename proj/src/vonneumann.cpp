#include "wavebound/vonneumann.hpp"

#include <cmath>
#include <numbers>

#include "wavebound/errors.hpp"
#include "wavebound/parallel.hpp"

namespace wavebound {

double amplification_1d(const SchemeCoefficients1D &c, double theta) {
  const double re = (c.b_m1 + c.b_p1) * std::cos(theta) + c.b_0;
  const double im = (c.b_p1 - c.b_m1) * std::sin(theta);
  return std::hypot(re, im);
}

double amplification_2d(const SchemeCoefficients2D &c, double theta_x, double theta_y) {
  const double re = (c.g_m1 + c.g_p1) * std::cos(theta_x) + c.g_0 + (c.d_m1 + c.d_p1) * std::cos(theta_y);
  const double im = (c.g_p1 - c.g_m1) * std::sin(theta_x) + (c.d_p1 - c.d_m1) * std::sin(theta_y);
  return std::hypot(re, im);
}

std::vector<double> phase_angles(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i)
    t[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  return t;
}

std::vector<double> courant_samples(std::size_t n, double c_max) {
  if (n < 2)
    throw InvalidArgument("Courant grid needs at least two samples");
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = c_max * static_cast<double>(i) / static_cast<double>(n - 1);
  return c;
}

double max_amplification_1d(const SchemeCoefficients1D &coeffs, std::size_t angle_n) {
  double g = 0.0;
  for (double theta : phase_angles(angle_n))
    g = std::max(g, amplification_1d(coeffs, theta));
  return g;
}

double stability_limit_1d_numeric(const BetaSpec &spec, std::size_t c_resolution,
                                  std::size_t angle_resolution, double c_max, double tol) {
  if (c_resolution < 64 || angle_resolution < 64)
    throw InvalidArgument("stability sweep resolutions must be at least 64");
  if (!(c_max > 0.0))
    throw InvalidArgument("c_max must be positive");
  double limit = 0.0;
  for (double c : courant_samples(c_resolution, c_max)) {
    if (max_amplification_1d(coefficients(spec, c), angle_resolution) > 1.0 + tol)
      break;
    limit = c;
  }
  return limit;
}

void validate(const SweepConfig &config) {
  if (config.grid_n < 64 || config.angle_n < 64)
    throw InvalidArgument("stability map resolutions must be at least 64");
  if (!(config.cx_max > 0.0) || !(config.cy_max > 0.0))
    throw InvalidArgument("Courant ranges must be positive");
  if (!(config.tol >= 0.0))
    throw InvalidArgument("tolerance must be non-negative");
}

StabilityMap stability_map_2d(const BetaSpec &beta_x, const BetaSpec &beta_y,
                              const SweepConfig &config) {
  validate(config);
  StabilityMap map;
  map.cx_values = courant_samples(config.grid_n, config.cx_max);
  map.cy_values = courant_samples(config.grid_n, config.cy_max);
  map.tolerance = config.tol;
  map.stable.assign(map.nx() * map.ny(), 0);

  const std::vector<double> theta = phase_angles(config.angle_n);
  std::vector<double> cos_t(theta.size()), sin_t(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    cos_t[k] = std::cos(theta[k]);
    sin_t[k] = std::sin(theta[k]);
  }
  const double limit_sq = (1.0 + config.tol) * (1.0 + config.tol);
  const std::size_t na = theta.size();
  const std::size_t ny = map.ny();
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(map.nx());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::ptrdiff_t ii = 0; ii < nx; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < ny; ++j) {
      const SchemeCoefficients2D c =
          coefficients_2d(beta_x, beta_y, map.cx_values[i], map.cy_values[j]);
      const double ax = c.g_m1 + c.g_p1, bx = c.g_p1 - c.g_m1;
      const double ay = c.d_m1 + c.d_p1, by = c.d_p1 - c.d_m1;
      bool stable = true;
      for (std::size_t kx = 0; kx < na && stable; ++kx) {
        const double re_x = ax * cos_t[kx] + c.g_0;
        const double im_x = bx * sin_t[kx];
        for (std::size_t ky = 0; ky < na; ++ky) {
          const double re = re_x + ay * cos_t[ky];
          const double im = im_x + by * sin_t[ky];
          if (re * re + im * im > limit_sq) {
            stable = false;
            break;
          }
        }
      }
      map.stable[i * ny + j] = stable ? 1 : 0;
    }
  }
  return map;
}

StabilityMap stability_map_2d(double beta, const SweepConfig &config) {
  const BetaSpec spec = BetaSpec::constant(beta);
  return stability_map_2d(spec, spec, config);
}

double region_area(const StabilityMap &map) {
  if (map.stable.empty())
    return 0.0;
  std::size_t count = 0;
  for (std::uint8_t s : map.stable)
    count += s;
  return static_cast<double>(count) / static_cast<double>(map.stable.size());
}

double axis_intercept_x(const StabilityMap &map) {
  double c = 0.0;
  for (std::size_t i = 0; i < map.nx() && map.at(i, 0); ++i)
    c = map.cx_values[i];
  return c;
}

double axis_intercept_y(const StabilityMap &map) {
  double c = 0.0;
  for (std::size_t j = 0; j < map.ny() && map.at(0, j); ++j)
    c = map.cy_values[j];
  return c;
}

} // namespace wavebound
