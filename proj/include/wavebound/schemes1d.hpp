#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavebound/core.hpp"
#include "wavebound/euler.hpp"

namespace wavebound {

/// Wave-speed coefficient beta(c) with s_hat = beta * lambda. Classical
/// three-point schemes are particular beta(c) curves.
class BetaSpec {
public:
  enum class Kind {
    Constant,
    Upwind,
    LaxWendroff,
    LaxFriedrichs,
    Force,
    GodunovCentred,
    Ftcs,
    ForceAlpha
  };

  static BetaSpec constant(double beta);
  static BetaSpec upwind() { return BetaSpec(Kind::Upwind, 1.0); }
  static BetaSpec lax_wendroff() { return BetaSpec(Kind::LaxWendroff, 0.0); }
  static BetaSpec lax_friedrichs() { return BetaSpec(Kind::LaxFriedrichs, 0.0); }
  static BetaSpec force() { return BetaSpec(Kind::Force, 1.0); }
  static BetaSpec godunov_centred() { return BetaSpec(Kind::GodunovCentred, 0.0); }
  static BetaSpec ftcs() { return BetaSpec(Kind::Ftcs, 0.0); }
  static BetaSpec force_alpha(double alpha);

  Kind kind() const { return kind_; }
  /// beta for Constant, alpha for ForceAlpha, unused otherwise.
  double parameter() const { return parameter_; }

  /// beta(c). Throws InvalidArgument for c <= 0 on curves singular at 0 (LF, FORCE, FORCE-alpha).
  double beta(double c) const;

  /// Viscosity coefficient d(c) = beta(c) c. A direction with c = 0 carries
  /// no flux, so d(0) = 0 for every kind.
  double viscosity(double c) const;

  /// Short label: GU, LW, LF, FO, GC, FTCS, FA2, beta1.25, ...
  std::string name() const;

private:
  BetaSpec(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

/// Constant perturbation of the upwind speed: beta = 1 - eps_B or 1 + eps_T.
struct PerturbationSpec {
  enum class Direction { Under, Over };
  Direction direction = Direction::Over;
  double epsilon = 0.0; // eps_B in [0, 1] or eps_T in [0, inf)

  static PerturbationSpec under(double eps_b);
  static PerturbationSpec over(double eps_t);
  double beta() const;
  BetaSpec as_beta_spec() const { return BetaSpec::constant(beta()); }
};

/// Weights of q_{i-1}, q_i, q_{i+1}.
struct SchemeCoefficients1D {
  double b_m1 = 0.0;
  double b_0 = 1.0;
  double b_p1 = 0.0;

  double sum() const { return b_m1 + b_0 + b_p1; }
};

/// (c(1+beta)/2, 1 - beta c, c(beta-1)/2). Throws InvalidArgument for
/// negative or non-finite beta or c.
SchemeCoefficients1D coefficients(double beta, double c);
SchemeCoefficients1D coefficients(const BetaSpec &spec, double c);

/// d = beta c in q^{n+1} = q - c/2 (q_{i+1} - q_{i-1}) + d/2 (q_{i+1} - 2q_i + q_{i-1}).
double viscous_form(double beta, double c);

/// Leading-order numerical viscosity dx lambda (beta - c) / 2.
double numerical_viscosity(double beta, double c, double dx, double lambda);

/// 1 <= beta <= 1/c, i.e. all three weights non-negative.
bool is_monotone(double beta, double c);

/// Largest Courant number with c^2 <= d(c) <= 1.
double stability_limit(const BetaSpec &spec);
double stability_limit(const PerturbationSpec &spec);

/// One periodic update q_i <- b_{-1} q_{i-1} + b_0 q_i + b_1 q_{i+1}.
/// OpenMP-parallel over cells; `out` must not alias `q`.
void step(std::span<const double> q, const SchemeCoefficients1D &coeffs, std::span<double> out);
std::vector<double> step(std::span<const double> q, const SchemeCoefficients1D &coeffs);

struct AdvectionResult {
  Grid1D grid;
  std::vector<double> x;
  std::vector<double> q;
  std::vector<double> q_exact;
  double beta = 0.0;
  double courant = 0.0;
  double output_time = 0.0;
  std::size_t steps = 0;
  double linf = 0.0;
  double l1 = 0.0;
  double qmax = 0.0;
  double qmin = 0.0;
};

/// 0 outside [1/4, 3/4], 1 inside.
double square_wave(double x);

/// Advects the square wave on [0, 1] with lambda = 1, periodic boundaries,
/// constant-beta Rusanov scheme at Courant number c. The last step is
/// shortened so the run ends exactly at output_time. Unstable runs are not
/// errors; their growth shows up in qmax/qmin.
AdvectionResult advect_square_wave(std::size_t n_cells, double beta, double c, double output_time);

/// Values above this count as instability in reports (stable monotone runs are bounded by 1).
inline constexpr double kInstabilityThreshold = 1.05;

/// dt = C_cfl c_lim dx / S_max with S_max = max_i (|u_i| + c_i).
/// Throws ZeroMaxSpeed when S_max is zero, InvalidArgument on empty input or dx <= 0.
double compute_time_step(std::span<const PrimitiveState> states, double gamma, double dx,
                         double cfl_coefficient, double c_lim);
double max_signal_speed(std::span<const PrimitiveState> states, double gamma);

/// Linear advection variant: S_max = |lambda|.
double compute_time_step(double lambda, double dx, double cfl_coefficient, double c_lim);

} // namespace wavebound
