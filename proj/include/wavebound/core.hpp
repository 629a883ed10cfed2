#pragma once

#include <cstddef>
#include <vector>

namespace wavebound {

enum class Boundary { Periodic };

/// Uniform cell-centred 1D mesh. Only periodic boundaries exist; neighbours
/// are found by modular indexing so there are no ghost cells.
struct Grid1D {
  std::size_t n_cells = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  Boundary boundary = Boundary::Periodic;

  double center(std::size_t i) const {
    return x_min + (static_cast<double>(i) + 0.5) * dx;
  }
  double length() const { return x_max - x_min; }
  std::vector<double> centers() const;
};

/// Throws InvalidArgument for n_cells == 0 or x_max <= x_min.
Grid1D build_grid(std::size_t n_cells, double x_min, double x_max);

struct CourantPair {
  double cx = 0.0;
  double cy = 0.0;
};

/// Throws InvalidArgument if either component is negative or not finite.
CourantPair make_courant_pair(double cx, double cy);

struct RunConfig {
  double cfl_coefficient = 1.0; // C_cfl, in (0, 1]
  double output_time = 1.0;
  double courant_number = 0.9;
};

/// Throws InvalidArgument unless 0 < C_cfl <= 1, T_out >= 0, c >= 0.
void validate(const RunConfig &config);

} // namespace wavebound
