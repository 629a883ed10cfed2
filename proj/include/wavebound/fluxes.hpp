#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "wavebound/errors.hpp"

namespace wavebound {

template <std::size_t N> using StateVector = std::array<double, N>;

/// HLL flux from left/right states, their physical fluxes and wave-speed
/// estimates. One-sided branches are inclusive (S_L >= 0 or S_R <= 0).
template <std::size_t N>
StateVector<N> hll_flux(const StateVector<N> &q_left, const StateVector<N> &q_right,
                        const StateVector<N> &f_left, const StateVector<N> &f_right,
                        double s_left, double s_right) {
  if (std::isnan(s_left) || std::isnan(s_right))
    throw DegenerateSpeeds("NaN wave-speed estimate");
  if (s_left >= 0.0)
    return f_left;
  if (s_right <= 0.0)
    return f_right;
  const double width = s_right - s_left;
  if (!(width > 0.0))
    throw DegenerateSpeeds("HLL middle branch needs S_L < S_R");
  StateVector<N> f{};
  for (std::size_t k = 0; k < N; ++k)
    f[k] = (s_right * f_left[k] - s_left * f_right[k] +
            s_left * s_right * (q_right[k] - q_left[k])) /
           width;
  return f;
}

/// Rusanov (local Lax-Friedrichs) flux: HLL with S_L = -s_hat, S_R = s_hat.
template <std::size_t N>
StateVector<N> rusanov_flux(const StateVector<N> &q_left, const StateVector<N> &q_right,
                            const StateVector<N> &f_left, const StateVector<N> &f_right,
                            double s_hat) {
  if (!(s_hat >= 0.0))
    throw InvalidArgument("Rusanov speed must be non-negative");
  StateVector<N> f{};
  for (std::size_t k = 0; k < N; ++k)
    f[k] = 0.5 * (f_left[k] + f_right[k]) - 0.5 * s_hat * (q_right[k] - q_left[k]);
  return f;
}

double hll_flux(double q_left, double q_right, double f_left, double f_right, double s_left,
                double s_right);
double rusanov_flux(double q_left, double q_right, double f_left, double f_right, double s_hat);

/// Linear advection f(q) = lambda q at one interface.
struct ScalarFluxInput {
  double q_left = 0.0;
  double q_right = 0.0;
  double lambda = 1.0;
};

/// Rusanov flux for linear advection with s_hat = beta * lambda:
/// 0.5 (1 + beta) lambda q_L + 0.5 (1 - beta) lambda q_R. The upwind value
/// carries the (1 + beta) weight, so beta = 1 is Godunov upwind.
/// Throws InvalidArgument unless lambda > 0.
double scalar_rusanov_flux(const ScalarFluxInput &in, double beta);

/// beta(c; alpha) = (1/(alpha c) + alpha c) / 2; alpha = 1 is FORCE.
double force_alpha_beta(double c, double alpha);

/// FORCE-alpha flux for linear advection at Courant number c.
/// Throws InvalidArgument unless alpha > 0 and c > 0.
double force_alpha_flux(double q_left, double q_right, double lambda, double c, double alpha);

} // namespace wavebound
