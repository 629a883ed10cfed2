#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library routine it is used to check.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wavebound/euler.hpp"
#include "wavebound/fluxes.hpp"
#include "wavebound/schemes2d.hpp"

namespace oracle {

struct Star {
  double p;
  double u;
};

// Pressure function written out directly, solved by bisection on a bracket.
inline double side_function(double p, double rho, double pk, double gamma) {
  const double c = std::sqrt(gamma * pk / rho);
  if (p > pk) {
    const double a = 2.0 / ((gamma + 1.0) * rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * pk;
    return (p - pk) * std::sqrt(a / (p + b));
  }
  return 2.0 * c / (gamma - 1.0) * (std::pow(p / pk, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

inline Star bisect_star(const wavebound::RiemannProblem &rp) {
  const auto &l = rp.left;
  const auto &r = rp.right;
  const double g = rp.gamma;
  auto f = [&](double p) {
    return side_function(p, l.rho, l.p, g) + side_function(p, r.rho, r.p, g) + r.u - l.u;
  };
  double lo = 0.0, hi = std::max(l.p, r.p);
  while (f(hi) < 0.0)
    hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  const double p = 0.5 * (lo + hi);
  const double u =
      0.5 * (l.u + r.u) + 0.5 * (side_function(p, r.rho, r.p, g) - side_function(p, l.rho, l.p, g));
  return {p, u};
}

// Shock speed from the Rankine-Hugoniot mass flux, rarefaction head otherwise.
inline double exact_right_speed(const wavebound::RiemannProblem &rp, double p_star) {
  const auto &r = rp.right;
  const double g = rp.gamma;
  const double c = std::sqrt(g * r.p / r.rho);
  if (p_star <= r.p)
    return r.u + c;
  const double a = 2.0 / ((g + 1.0) * r.rho);
  const double b = (g - 1.0) / (g + 1.0) * r.p;
  const double mass_flux = std::sqrt((p_star + b) / a); // rho_R (S_R - u_R)
  return r.u + mass_flux / r.rho;
}

inline double amplification_1d(double bm, double b0, double bp, double theta) {
  using namespace std::complex_literals;
  return std::abs(bm * std::exp(-1i * theta) + b0 + bp * std::exp(1i * theta));
}

inline double amplification_2d(const wavebound::SchemeCoefficients2D &c, double tx, double ty) {
  using namespace std::complex_literals;
  return std::abs(c.g_m1 * std::exp(-1i * tx) + c.g_0 + c.g_p1 * std::exp(1i * tx) +
                  c.d_m1 * std::exp(-1i * ty) + c.d_p1 * std::exp(1i * ty));
}

// Conservative update with Rusanov interface fluxes, lambda_x = lambda_y = 1
// and dt/dx = cx, dt/dy = cy.
inline wavebound::Field2D flux_difference_step(const wavebound::Field2D &q, double beta_x,
                                               double beta_y, double cx, double cy) {
  const std::size_t nx = q.nx(), ny = q.ny();
  wavebound::Field2D out(nx, ny);
  auto fx = [&](std::size_t i, std::size_t j) {
    const double ql = q(i, j), qr = q((i + 1) % nx, j);
    return wavebound::rusanov_flux(ql, qr, ql, qr, beta_x);
  };
  auto fy = [&](std::size_t i, std::size_t j) {
    const double ql = q(i, j), qr = q(i, (j + 1) % ny);
    return wavebound::rusanov_flux(ql, qr, ql, qr, beta_y);
  };
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      out(i, j) = q(i, j) - cx * (fx(i, j) - fx((i + nx - 1) % nx, j)) -
                  cy * (fy(i, j) - fy(i, (j + ny - 1) % ny));
  return out;
}

// Random admissible problem: log-uniform rho, p in [1e-3, 1e3], |u| <= 50,
// vacuum-generating draws rejected.
inline wavebound::RiemannProblem random_problem(std::mt19937_64 &rng, double gamma = 1.4) {
  std::uniform_real_distribution<double> log_range(-3.0, 3.0);
  std::uniform_real_distribution<double> vel(-50.0, 50.0);
  for (;;) {
    wavebound::RiemannProblem rp;
    rp.gamma = gamma;
    rp.left = {std::pow(10.0, log_range(rng)), vel(rng), std::pow(10.0, log_range(rng))};
    rp.right = {std::pow(10.0, log_range(rng)), vel(rng), std::pow(10.0, log_range(rng))};
    const double cl = std::sqrt(gamma * rp.left.p / rp.left.rho);
    const double cr = std::sqrt(gamma * rp.right.p / rp.right.rho);
    if (2.0 / (gamma - 1.0) * (cl + cr) > rp.right.u - rp.left.u)
      return rp;
  }
}

} // namespace oracle
