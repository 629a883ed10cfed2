#include "wavebound/fluxes.hpp"

namespace wavebound {

double hll_flux(double q_left, double q_right, double f_left, double f_right, double s_left,
                double s_right) {
  return hll_flux<1>({q_left}, {q_right}, {f_left}, {f_right}, s_left, s_right)[0];
}

double rusanov_flux(double q_left, double q_right, double f_left, double f_right, double s_hat) {
  return rusanov_flux<1>({q_left}, {q_right}, {f_left}, {f_right}, s_hat)[0];
}

double scalar_rusanov_flux(const ScalarFluxInput &in, double beta) {
  if (!(in.lambda > 0.0))
    throw InvalidArgument("scalar Rusanov flux assumes lambda > 0");
  return 0.5 * (1.0 + beta) * in.lambda * in.q_left + 0.5 * (1.0 - beta) * in.lambda * in.q_right;
}

double force_alpha_beta(double c, double alpha) {
  if (!(alpha > 0.0) || !(c > 0.0))
    throw InvalidArgument("FORCE-alpha needs alpha > 0 and c > 0");
  return 0.5 * (1.0 / (alpha * c) + alpha * c);
}

double force_alpha_flux(double q_left, double q_right, double lambda, double c, double alpha) {
  const double r = force_alpha_beta(c, alpha);
  return 0.5 * (1.0 + r) * lambda * q_left + 0.5 * (1.0 - r) * lambda * q_right;
}

} // namespace wavebound
