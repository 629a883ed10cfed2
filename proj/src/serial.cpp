#include "wavebound/serial.hpp"

#include <algorithm>

namespace wavebound::serial {

std::vector<double> step(std::span<const double> q, const SchemeCoefficients1D &c) {
  const std::size_t n = q.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = c.b_m1 * q[(i + n - 1) % n] + c.b_0 * q[i] + c.b_p1 * q[(i + 1) % n];
  return out;
}

Field2D step_2d(const Field2D &q, const SchemeCoefficients2D &c) {
  const std::size_t nx = q.nx(), ny = q.ny();
  Field2D out(nx, ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      out(i, j) = c.g_m1 * q((i + nx - 1) % nx, j) + c.g_0 * q(i, j) + c.g_p1 * q((i + 1) % nx, j) +
                  c.d_m1 * q(i, (j + ny - 1) % ny) + c.d_p1 * q(i, (j + 1) % ny);
  return out;
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

  for (std::size_t i = 0; i < map.nx(); ++i) {
    for (std::size_t j = 0; j < map.ny(); ++j) {
      const SchemeCoefficients2D c =
          coefficients_2d(beta_x, beta_y, map.cx_values[i], map.cy_values[j]);
      double g_max = 0.0;
      for (double tx : theta)
        for (double ty : theta)
          g_max = std::max(g_max, amplification_2d(c, tx, ty));
      map.stable[i * map.ny() + j] = g_max <= 1.0 + config.tol ? 1 : 0;
    }
  }
  return map;
}

} // namespace wavebound::serial
