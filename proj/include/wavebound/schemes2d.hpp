#pragma once

#include <cstddef>
#include <vector>

#include "wavebound/schemes1d.hpp"

namespace wavebound {

/// Periodic nx-by-ny cell field, x index fastest.
class Field2D {
public:
  Field2D() = default;
  Field2D(std::size_t nx, std::size_t ny, double value = 0.0)
      : nx_(nx), ny_(ny), data_(nx * ny, value) {}

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double &operator()(std::size_t i, std::size_t j) { return data_[j * nx_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * nx_ + i]; }
  std::vector<double> &data() { return data_; }
  const std::vector<double> &data() const { return data_; }

  double sum() const;
  double min() const;
  double max() const;
  Field2D transposed() const;

private:
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<double> data_;
};

/// Simultaneous-update Rusanov scheme for q_t + lambda_x q_x + lambda_y q_y = 0,
/// lambda_x, lambda_y >= 0.
struct Advection2DSpec {
  double lambda_x = 1.0;
  double lambda_y = 1.0;
  double beta_x = 1.0;
  double beta_y = 1.0;
  double cx = 0.0;
  double cy = 0.0;
};

/// Weights of q_{i-1,j}, q_{i,j}, q_{i+1,j}, q_{i,j-1}, q_{i,j+1}.
struct SchemeCoefficients2D {
  double g_m1 = 0.0;
  double g_0 = 1.0;
  double g_p1 = 0.0;
  double d_m1 = 0.0;
  double d_p1 = 0.0;

  double sum() const { return g_m1 + g_0 + g_p1 + d_m1 + d_p1; }
};

void validate(const Advection2DSpec &spec);

SchemeCoefficients2D coefficients_2d(const Advection2DSpec &spec);

/// Courant-dependent beta curves per direction; uses BetaSpec::viscosity so a
/// direction with zero Courant number drops out.
SchemeCoefficients2D coefficients_2d(const BetaSpec &beta_x, const BetaSpec &beta_y, double cx,
                                     double cy);

/// All five weights non-negative: beta_x >= 1, beta_y >= 1 and
/// beta_x c_x + beta_y c_y <= 1 when both directions are active.
bool is_monotone_2d(const Advection2DSpec &spec);
bool is_monotone_2d(const SchemeCoefficients2D &coeffs);

/// One periodic five-point update; OpenMP-parallel over rows. `out` is resized.
void step_2d(const Field2D &q, const SchemeCoefficients2D &coeffs, Field2D &out);
Field2D step_2d(const Field2D &q, const SchemeCoefficients2D &coeffs);

} // namespace wavebound
