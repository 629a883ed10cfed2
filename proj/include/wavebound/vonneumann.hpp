#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wavebound/schemes1d.hpp"
#include "wavebound/schemes2d.hpp"

namespace wavebound {

/// |G(theta)| for G = b_{-1} e^{-i theta} + b_0 + b_1 e^{i theta}.
double amplification_1d(const SchemeCoefficients1D &coeffs, double theta);

/// |G| for the five-point scheme at phase angles (theta_x, theta_y).
double amplification_2d(const SchemeCoefficients2D &coeffs, double theta_x, double theta_y);

/// Max of |G| over angle_n uniform angles in [0, 2 pi).
double max_amplification_1d(const SchemeCoefficients1D &coeffs, std::size_t angle_n);

/// Uniform sample i * 2 pi / n, i = 0..n-1.
std::vector<double> phase_angles(std::size_t n);

/// n points on [0, c_max] including both ends.
std::vector<double> courant_samples(std::size_t n, double c_max);

inline constexpr double kAmplificationTolerance = 1e-10;

/// Largest sampled c such that every sample in [0, c] has max |G| <= 1 + tol.
/// Both resolutions must be at least 64.
double stability_limit_1d_numeric(const BetaSpec &spec, std::size_t c_resolution,
                                  std::size_t angle_resolution, double c_max = 1.0,
                                  double tol = kAmplificationTolerance);

struct SweepConfig {
  double cx_max = 1.0;
  double cy_max = 1.0;
  std::size_t grid_n = 200;
  std::size_t angle_n = 128;
  double tol = kAmplificationTolerance;
};

void validate(const SweepConfig &config);

/// Boolean von Neumann stability over a Courant grid. stable(i, j) refers to
/// (cx_values[i], cy_values[j]); neutral stability (|G| = 1) counts as stable.
struct StabilityMap {
  std::vector<double> cx_values;
  std::vector<double> cy_values;
  std::vector<std::uint8_t> stable; // i * cy_values.size() + j
  double tolerance = kAmplificationTolerance;

  std::size_t nx() const { return cx_values.size(); }
  std::size_t ny() const { return cy_values.size(); }
  bool at(std::size_t i, std::size_t j) const { return stable[i * ny() + j] != 0; }
};

/// The sweep is OpenMP-parallel over cx rows and bit-identical for any thread count.
StabilityMap stability_map_2d(const BetaSpec &beta_x, const BetaSpec &beta_y,
                              const SweepConfig &config = {});
StabilityMap stability_map_2d(double beta, const SweepConfig &config = {});

/// Stable cells / total cells.
double region_area(const StabilityMap &map);

/// Largest contiguous stable Courant number along the cy = 0 (resp. cx = 0) axis.
double axis_intercept_x(const StabilityMap &map);
double axis_intercept_y(const StabilityMap &map);

} // namespace wavebound
