#include "wavebound/core.hpp"

#include <cmath>
#include <string>

#include "wavebound/errors.hpp"

namespace wavebound {

std::vector<double> Grid1D::centers() const {
  std::vector<double> x(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i)
    x[i] = center(i);
  return x;
}

Grid1D build_grid(std::size_t n_cells, double x_min, double x_max) {
  if (n_cells == 0)
    throw InvalidArgument("grid needs at least one cell");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    throw InvalidArgument("grid needs x_max > x_min, got [" + std::to_string(x_min) +
                          ", " + std::to_string(x_max) + "]");
  Grid1D g;
  g.n_cells = n_cells;
  g.x_min = x_min;
  g.x_max = x_max;
  g.dx = (x_max - x_min) / static_cast<double>(n_cells);
  return g;
}

CourantPair make_courant_pair(double cx, double cy) {
  if (!(cx >= 0.0) || !(cy >= 0.0) || !std::isfinite(cx) || !std::isfinite(cy))
    throw InvalidArgument("Courant numbers must be finite and non-negative");
  return {cx, cy};
}

void validate(const RunConfig &config) {
  if (!(config.cfl_coefficient > 0.0 && config.cfl_coefficient <= 1.0))
    throw InvalidArgument("CFL coefficient must lie in (0, 1]");
  if (!(config.output_time >= 0.0) || !std::isfinite(config.output_time))
    throw InvalidArgument("output time must be finite and non-negative");
  if (!(config.courant_number >= 0.0) || !std::isfinite(config.courant_number))
    throw InvalidArgument("Courant number must be finite and non-negative");
}

} // namespace wavebound
