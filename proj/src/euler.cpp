#include "wavebound/euler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavebound/errors.hpp"
#include "wavebound/estimators.hpp"

namespace wavebound {

namespace {

constexpr int kMaxNewtonIterations = 60;
constexpr double kPressureChangeTol = 1e-10;

} // namespace

void validate(const PrimitiveState &s) {
  if (!std::isfinite(s.rho) || !std::isfinite(s.u) || !std::isfinite(s.p))
    throw InvalidArgument("non-finite primitive state");
  if (!(s.rho > 0.0))
    throw InvalidArgument("density must be positive, got " + std::to_string(s.rho));
  if (!(s.p > 0.0))
    throw InvalidArgument("pressure must be positive, got " + std::to_string(s.p));
}

void validate(const RiemannProblem &rp) {
  validate(rp.left);
  validate(rp.right);
  if (!(rp.gamma > 1.0) || !std::isfinite(rp.gamma))
    throw InvalidArgument("ratio of specific heats must exceed 1");
}

double sound_speed(const PrimitiveState &s, double gamma) {
  validate(s);
  return std::sqrt(gamma * s.p / s.rho);
}

double total_enthalpy(const PrimitiveState &s, double gamma) {
  const ConservedState q = primitive_to_conserved(s, gamma);
  return (q.energy + s.p) / s.rho;
}

ConservedState primitive_to_conserved(const PrimitiveState &s, double gamma) {
  validate(s);
  return {s.rho, s.rho * s.u, s.p / (gamma - 1.0) + 0.5 * s.rho * s.u * s.u};
}

PrimitiveState conserved_to_primitive(const ConservedState &q, double gamma) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho))
    throw InvalidArgument("density must be positive");
  const double u = q.mom / q.rho;
  const double internal = q.energy - 0.5 * q.mom * u;
  if (!(internal > 0.0))
    throw InvalidArgument("internal energy must be positive");
  return {q.rho, u, (gamma - 1.0) * internal};
}

EulerVector physical_flux(const PrimitiveState &s, double gamma) {
  const ConservedState q = primitive_to_conserved(s, gamma);
  return {q.mom, q.mom * s.u + s.p, s.u * (q.energy + s.p)};
}

bool generates_vacuum(const RiemannProblem &rp) {
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  return 2.0 / (rp.gamma - 1.0) * (cl + cr) <= rp.right.u - rp.left.u;
}

double shock_speed_factor(double p, double p_side, double gamma) {
  if (p <= p_side)
    return 1.0;
  return std::sqrt(1.0 + (gamma + 1.0) / (2.0 * gamma) * (p / p_side - 1.0));
}

PressureFunction pressure_function(double p, const PrimitiveState &side, double gamma) {
  const double c = sound_speed(side, gamma);
  if (p > side.p) {
    // shock
    const double a = 2.0 / ((gamma + 1.0) * side.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * side.p;
    const double root = std::sqrt(a / (p + b));
    return {(p - side.p) * root, root * (1.0 - 0.5 * (p - side.p) / (b + p))};
  }
  // rarefaction
  const double ratio = p / side.p;
  const double exponent = (gamma - 1.0) / (2.0 * gamma);
  return {2.0 * c / (gamma - 1.0) * (std::pow(ratio, exponent) - 1.0),
          std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (side.rho * c)};
}

double star_residual(const RiemannProblem &rp, double p) {
  return pressure_function(p, rp.left, rp.gamma).value +
         pressure_function(p, rp.right, rp.gamma).value + (rp.right.u - rp.left.u);
}

StarRegion solve_star(const RiemannProblem &rp) {
  validate(rp);
  if (generates_vacuum(rp))
    throw VacuumGenerated("initial data generate vacuum; no star region");

  const double du = rp.right.u - rp.left.u;
  double p = std::max(two_rarefaction_pressure(rp), 1e-8 * std::min(rp.left.p, rp.right.p));

  bool converged = false;
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const PressureFunction fl = pressure_function(p, rp.left, rp.gamma);
    const PressureFunction fr = pressure_function(p, rp.right, rp.gamma);
    double next = p - (fl.value + fr.value + du) / (fl.derivative + fr.derivative);
    if (!(next > 0.0))
      next = 0.1 * p; // overshoot past zero near vacuum; stay positive
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < kPressureChangeTol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("star pressure iteration did not converge in " +
                        std::to_string(kMaxNewtonIterations) + " iterations");

  const double u = 0.5 * (rp.left.u + rp.right.u) +
                   0.5 * (pressure_function(p, rp.right, rp.gamma).value -
                          pressure_function(p, rp.left, rp.gamma).value);
  return {p, u};
}

WaveSpeedPair exact_wave_speeds(const RiemannProblem &rp, const StarRegion &star) {
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  return {rp.left.u - cl * shock_speed_factor(star.p_star, rp.left.p, rp.gamma),
          rp.right.u + cr * shock_speed_factor(star.p_star, rp.right.p, rp.gamma)};
}

WaveSpeedPair exact_wave_speeds(const RiemannProblem &rp) {
  return exact_wave_speeds(rp, solve_star(rp));
}

RiemannProblem mirrored(const RiemannProblem &rp) {
  return {{rp.right.rho, -rp.right.u, rp.right.p}, {rp.left.rho, -rp.left.u, rp.left.p}, rp.gamma};
}

std::vector<NamedProblem> standard_riemann_problems() {
  constexpr double g = 1.4;
  return {
      {"1", {{1.0, 0.0, 1.0}, {1.0, 0.0, 0.1}, g}},
      {"2", {{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, g}},
      {"3", {{1.0, 0.0, 1.0}, {0.001, 0.0, 0.8}, g}},
      {"4", {{1.0, 0.0, 0.01}, {1.0, 0.0, 1000.0}, g}},
      {"5", {{6.0, 8.0, 460.0}, {6.0, -6.0, 46.0}, g}},
      {"6", {{600.0, 80.0, 4600.0}, {6.0, -6.0, 46.0}, g}},
      {"7", {{1.0, -2.0, 0.4}, {1.0, 2.0, 0.4}, g}},
  };
}

} // namespace wavebound
