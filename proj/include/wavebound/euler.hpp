#pragma once

#include <array>
#include <string>
#include <vector>

namespace wavebound {

/// Ideal-gas state in primitive variables. Vacuum (rho or p <= 0) is not admissible.
struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

/// Conserved variables (rho, rho*u, E).
struct ConservedState {
  double rho = 1.0;
  double mom = 0.0;
  double energy = 0.0;

  std::array<double, 3> as_array() const { return {rho, mom, energy}; }
};

struct RiemannProblem {
  PrimitiveState left;
  PrimitiveState right;
  double gamma = 1.4;
};

struct StarRegion {
  double p_star = 0.0;
  double u_star = 0.0;
};

/// Estimated or exact extreme signal speeds. No ordering is implied:
/// some estimators return s_left > s_right.
struct WaveSpeedPair {
  double s_left = 0.0;
  double s_right = 0.0;
};

struct NamedProblem {
  std::string name;
  RiemannProblem problem;
};

using EulerVector = std::array<double, 3>;

void validate(const PrimitiveState &s);
void validate(const RiemannProblem &rp);

double sound_speed(const PrimitiveState &s, double gamma);

/// H = (E + p) / rho.
double total_enthalpy(const PrimitiveState &s, double gamma);

ConservedState primitive_to_conserved(const PrimitiveState &s, double gamma);
PrimitiveState conserved_to_primitive(const ConservedState &q, double gamma);

/// (rho u, rho u^2 + p, u (E + p)).
EulerVector physical_flux(const PrimitiveState &s, double gamma);

/// True when the data violate (2/(gamma-1))(c_L + c_R) > u_R - u_L.
bool generates_vacuum(const RiemannProblem &rp);

/// Factor multiplying the sound speed in the speed of a shock running into a
/// state at pressure p_side, behind which the pressure is p; 1 when p <= p_side.
double shock_speed_factor(double p, double p_side, double gamma);

/// f_K(p) for one side of the Riemann problem and its derivative.
struct PressureFunction {
  double value;
  double derivative;
};
PressureFunction pressure_function(double p, const PrimitiveState &side, double gamma);

/// f_L(p) + f_R(p) + (u_R - u_L); zero at the exact star pressure.
double star_residual(const RiemannProblem &rp, double p);

/// Exact star pressure and velocity by Newton iteration on the pressure
/// function, started from the two-rarefaction estimate.
/// Throws VacuumGenerated if the data create vacuum, NoConvergence after
/// 60 iterations without a relative pressure change below 1e-10.
StarRegion solve_star(const RiemannProblem &rp);

/// Outermost signal speeds of the exact solution: shock speeds or
/// rarefaction heads.
WaveSpeedPair exact_wave_speeds(const RiemannProblem &rp);
WaveSpeedPair exact_wave_speeds(const RiemannProblem &rp, const StarRegion &star);

/// Swap sides and negate velocities.
RiemannProblem mirrored(const RiemannProblem &rp);

/// The seven gamma = 1.4 shock-tube problems used for wave-speed tables.
std::vector<NamedProblem> standard_riemann_problems();

} // namespace wavebound
