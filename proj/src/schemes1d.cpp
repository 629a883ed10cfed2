#include "wavebound/schemes1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavebound/errors.hpp"
#include "wavebound/fluxes.hpp"
#include "wavebound/parallel.hpp"

namespace wavebound {

namespace {

std::string format_parameter(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

void check_non_negative(double v, const char *what) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw InvalidArgument(std::string(what) + " must be finite and non-negative");
}

} // namespace

BetaSpec BetaSpec::constant(double beta) {
  check_non_negative(beta, "beta");
  return BetaSpec(Kind::Constant, beta);
}

BetaSpec BetaSpec::force_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidArgument("FORCE-alpha needs alpha > 0");
  return BetaSpec(Kind::ForceAlpha, alpha);
}

double BetaSpec::beta(double c) const {
  switch (kind_) {
  case Kind::Constant:
    return parameter_;
  case Kind::Upwind:
    return 1.0;
  case Kind::LaxWendroff:
    return c;
  case Kind::GodunovCentred:
    return 2.0 * c;
  case Kind::Ftcs:
    return 0.0;
  case Kind::LaxFriedrichs:
    if (!(c > 0.0))
      throw InvalidArgument("beta_LF = 1/c needs c > 0");
    return 1.0 / c;
  case Kind::Force:
    if (!(c > 0.0))
      throw InvalidArgument("beta_FO needs c > 0");
    return (1.0 + c * c) / (2.0 * c);
  case Kind::ForceAlpha:
    return force_alpha_beta(c, parameter_);
  }
  return 0.0;
}

double BetaSpec::viscosity(double c) const {
  if (c == 0.0)
    return 0.0;
  switch (kind_) {
  case Kind::LaxFriedrichs:
    return 1.0;
  case Kind::Force:
    return 0.5 * (1.0 + c * c);
  case Kind::ForceAlpha:
    return 0.5 * (1.0 / parameter_ + parameter_ * c * c);
  default:
    return beta(c) * c;
  }
}

std::string BetaSpec::name() const {
  switch (kind_) {
  case Kind::Constant:
    return "beta" + format_parameter(parameter_);
  case Kind::Upwind:
    return "GU";
  case Kind::LaxWendroff:
    return "LW";
  case Kind::LaxFriedrichs:
    return "LF";
  case Kind::Force:
    return "FO";
  case Kind::GodunovCentred:
    return "GC";
  case Kind::Ftcs:
    return "FTCS";
  case Kind::ForceAlpha:
    return "FA" + format_parameter(parameter_);
  }
  return "?";
}

PerturbationSpec PerturbationSpec::under(double eps_b) {
  if (!(eps_b >= 0.0 && eps_b <= 1.0))
    throw InvalidArgument("eps_B must lie in [0, 1]");
  return {Direction::Under, eps_b};
}

PerturbationSpec PerturbationSpec::over(double eps_t) {
  check_non_negative(eps_t, "eps_T");
  return {Direction::Over, eps_t};
}

double PerturbationSpec::beta() const {
  return direction == Direction::Under ? 1.0 - epsilon : 1.0 + epsilon;
}

SchemeCoefficients1D coefficients(double beta, double c) {
  check_non_negative(beta, "beta");
  check_non_negative(c, "Courant number");
  return {0.5 * c * (1.0 + beta), 1.0 - beta * c, 0.5 * c * (-1.0 + beta)};
}

SchemeCoefficients1D coefficients(const BetaSpec &spec, double c) {
  check_non_negative(c, "Courant number");
  const double d = spec.viscosity(c);
  return {0.5 * (c + d), 1.0 - d, 0.5 * (d - c)};
}

double viscous_form(double beta, double c) { return beta * c; }

double numerical_viscosity(double beta, double c, double dx, double lambda) {
  return 0.5 * dx * lambda * (beta - c);
}

bool is_monotone(double beta, double c) {
  constexpr double slack = 1e-14;
  return beta >= 1.0 - slack && beta * c <= 1.0 + slack;
}

double stability_limit(const BetaSpec &spec) {
  switch (spec.kind()) {
  case BetaSpec::Kind::Constant: {
    const double b = spec.parameter();
    return b > 0.0 ? std::min(b, 1.0 / b) : 0.0;
  }
  case BetaSpec::Kind::Upwind:
  case BetaSpec::Kind::LaxWendroff:
  case BetaSpec::Kind::LaxFriedrichs:
  case BetaSpec::Kind::Force:
    return 1.0;
  case BetaSpec::Kind::GodunovCentred:
    return 0.5 * std::sqrt(2.0);
  case BetaSpec::Kind::Ftcs:
    return 0.0;
  case BetaSpec::Kind::ForceAlpha: {
    const double a = spec.parameter();
    return a > 0.5 ? std::sqrt(2.0 * a - 1.0) / a : 0.0;
  }
  }
  return 0.0;
}

double stability_limit(const PerturbationSpec &spec) {
  return spec.direction == PerturbationSpec::Direction::Under ? 1.0 - spec.epsilon
                                                              : 1.0 / (1.0 + spec.epsilon);
}

void step(std::span<const double> q, const SchemeCoefficients1D &coeffs, std::span<double> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.size());
  if (out.size() != q.size())
    throw InvalidArgument("step: output size mismatch");
  if (n == 0)
    return;
  const double bm = coeffs.b_m1, b0 = coeffs.b_0, bp = coeffs.b_p1;
  if (n == 1) {
    out[0] = bm * q[0] + b0 * q[0] + bp * q[0];
    return;
  }
  out[0] = bm * q[n - 1] + b0 * q[0] + bp * q[1];
  out[n - 1] = bm * q[n - 2] + b0 * q[n - 1] + bp * q[0];
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (n > 4096)
  for (std::ptrdiff_t i = 1; i < n - 1; ++i)
    out[i] = bm * q[i - 1] + b0 * q[i] + bp * q[i + 1];
}

std::vector<double> step(std::span<const double> q, const SchemeCoefficients1D &coeffs) {
  std::vector<double> out(q.size());
  step(q, coeffs, out);
  return out;
}

double square_wave(double x) { return (x >= 0.25 && x <= 0.75) ? 1.0 : 0.0; }

AdvectionResult advect_square_wave(std::size_t n_cells, double beta, double c, double output_time) {
  check_non_negative(beta, "beta");
  if (!(c > 0.0) || !std::isfinite(c))
    throw InvalidArgument("Courant number must be positive");
  check_non_negative(output_time, "output time");

  constexpr double lambda = 1.0;
  AdvectionResult r;
  r.grid = build_grid(n_cells, 0.0, 1.0);
  r.x = r.grid.centers();
  r.beta = beta;
  r.courant = c;
  r.output_time = output_time;

  std::vector<double> q(n_cells), next(n_cells);
  std::transform(r.x.begin(), r.x.end(), q.begin(), square_wave);

  const double dt = c * r.grid.dx / lambda;
  const auto full_steps = static_cast<std::size_t>(std::floor(output_time / dt + 1e-9));
  const double remainder = output_time - static_cast<double>(full_steps) * dt;

  const SchemeCoefficients1D coeffs = coefficients(beta, c);
  for (std::size_t s = 0; s < full_steps; ++s) {
    step(q, coeffs, next);
    q.swap(next);
  }
  r.steps = full_steps;
  if (remainder > 1e-12 * std::max(output_time, 1.0)) {
    step(q, coefficients(beta, c * remainder / dt), next);
    q.swap(next);
    ++r.steps;
  }

  r.q_exact.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    double xi = r.x[i] - lambda * output_time;
    xi -= std::floor(xi);
    r.q_exact[i] = square_wave(xi);
  }

  r.linf = 0.0;
  r.l1 = 0.0;
  for (std::size_t i = 0; i < n_cells; ++i) {
    const double e = std::abs(q[i] - r.q_exact[i]);
    r.linf = std::max(r.linf, e);
    r.l1 += e * r.grid.dx;
  }
  const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
  r.qmin = *lo;
  r.qmax = *hi;
  r.q = std::move(q);
  return r;
}

double max_signal_speed(std::span<const PrimitiveState> states, double gamma) {
  if (states.empty())
    throw InvalidArgument("time step needs at least one state");
  double s = 0.0;
  for (const PrimitiveState &w : states)
    s = std::max(s, std::abs(w.u) + sound_speed(w, gamma));
  return s;
}

namespace {

double time_step_from_speed(double s_max, double dx, double cfl_coefficient, double c_lim) {
  if (!(dx > 0.0))
    throw InvalidArgument("dx must be positive");
  if (!(cfl_coefficient > 0.0 && cfl_coefficient <= 1.0))
    throw InvalidArgument("CFL coefficient must lie in (0, 1]");
  if (s_max == 0.0)
    throw ZeroMaxSpeed("maximum wave speed is zero; time step undefined");
  return cfl_coefficient * c_lim * dx / s_max;
}

} // namespace

double compute_time_step(std::span<const PrimitiveState> states, double gamma, double dx,
                         double cfl_coefficient, double c_lim) {
  return time_step_from_speed(max_signal_speed(states, gamma), dx, cfl_coefficient, c_lim);
}

double compute_time_step(double lambda, double dx, double cfl_coefficient, double c_lim) {
  return time_step_from_speed(std::abs(lambda), dx, cfl_coefficient, c_lim);
}

} // namespace wavebound
