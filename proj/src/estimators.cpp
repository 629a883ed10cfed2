#include "wavebound/estimators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "wavebound/errors.hpp"

namespace wavebound {

namespace {

struct RoeAverages {
  double u;
  double weight_left; // sqrt(rho_L) / (sqrt(rho_L) + sqrt(rho_R))
  double weight_right;
};

RoeAverages roe_averages(const RiemannProblem &rp) {
  const double sl = std::sqrt(rp.left.rho);
  const double sr = std::sqrt(rp.right.rho);
  const double wl = sl / (sl + sr);
  const double wr = sr / (sl + sr);
  return {wl * rp.left.u + wr * rp.right.u, wl, wr};
}

} // namespace

std::string_view to_string(EstimatorId id) {
  switch (id) {
  case EstimatorId::DavisA:
    return "davis_a";
  case EstimatorId::DavisB:
    return "davis_b";
  case EstimatorId::Einfeldt:
    return "einfeldt";
  case EstimatorId::Batten:
    return "batten";
  case EstimatorId::Toro:
    return "toro";
  }
  return "unknown";
}

WaveSpeedPair davis_a(const RiemannProblem &rp) {
  validate(rp);
  return {rp.left.u - sound_speed(rp.left, rp.gamma), rp.right.u + sound_speed(rp.right, rp.gamma)};
}

WaveSpeedPair davis_b(const RiemannProblem &rp) {
  validate(rp);
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  return {std::min(rp.left.u - cl, rp.right.u - cr), std::max(rp.left.u + cl, rp.right.u + cr)};
}

WaveSpeedPair einfeldt(const RiemannProblem &rp) {
  validate(rp);
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  const RoeAverages roe = roe_averages(rp);
  const double du = rp.right.u - rp.left.u;
  const double d2 = roe.weight_left * cl * cl + roe.weight_right * cr * cr +
                    0.5 * roe.weight_left * roe.weight_right * du * du;
  assert(d2 >= 0.0);
  const double d = std::sqrt(d2);
  return {roe.u - d, roe.u + d};
}

WaveSpeedPair batten(const RiemannProblem &rp) {
  validate(rp);
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  const RoeAverages roe = roe_averages(rp);
  const double h = roe.weight_left * total_enthalpy(rp.left, rp.gamma) +
                   roe.weight_right * total_enthalpy(rp.right, rp.gamma);
  const double c2 = (rp.gamma - 1.0) * (h - 0.5 * roe.u * roe.u);
  if (!(c2 > 0.0))
    throw ImaginarySoundSpeed("Roe-averaged enthalpy gives non-positive c~^2");
  const double c = std::sqrt(c2);
  return {std::min(rp.left.u - cl, roe.u - c), std::max(rp.right.u + cr, roe.u + c)};
}

double two_rarefaction_pressure(const RiemannProblem &rp) {
  validate(rp);
  const double g = rp.gamma;
  const double cl = sound_speed(rp.left, g);
  const double cr = sound_speed(rp.right, g);
  const double z = (g - 1.0) / (2.0 * g);
  const double numerator = cl + cr - 0.5 * (g - 1.0) * (rp.right.u - rp.left.u);
  if (numerator <= 0.0)
    return 0.0; // vacuum-generating data
  const double denominator = cl / std::pow(rp.left.p, z) + cr / std::pow(rp.right.p, z);
  return std::pow(numerator / denominator, 1.0 / z);
}

WaveSpeedPair toro(const RiemannProblem &rp) {
  const double p = two_rarefaction_pressure(rp);
  const double cl = sound_speed(rp.left, rp.gamma);
  const double cr = sound_speed(rp.right, rp.gamma);
  return {rp.left.u - cl * shock_speed_factor(p, rp.left.p, rp.gamma),
          rp.right.u + cr * shock_speed_factor(p, rp.right.p, rp.gamma)};
}

WaveSpeedPair estimate(EstimatorId id, const RiemannProblem &rp) {
  switch (id) {
  case EstimatorId::DavisA:
    return davis_a(rp);
  case EstimatorId::DavisB:
    return davis_b(rp);
  case EstimatorId::Einfeldt:
    return einfeldt(rp);
  case EstimatorId::Batten:
    return batten(rp);
  case EstimatorId::Toro:
    return toro(rp);
  }
  throw InvalidArgument("unknown estimator");
}

double rusanov_speed(const WaveSpeedPair &pair) {
  return std::max(std::abs(pair.s_left), std::abs(pair.s_right));
}

std::vector<EstimatorRow> estimator_table(const std::vector<NamedProblem> &problems) {
  std::vector<EstimatorRow> rows;
  rows.reserve(problems.size());
  for (const NamedProblem &np : problems) {
    EstimatorRow row;
    row.name = np.name;
    row.exact = exact_wave_speeds(np.problem).s_right;
    for (std::size_t k = 0; k < kTableOrder.size(); ++k) {
      try {
        const double s = estimate(kTableOrder[k], np.problem).s_right;
        row.s_right[k] = s;
        row.fails_bound[k] = s < row.exact - kBoundTolerance;
      } catch (const NumericalError &e) {
        row.error[k] = e.what();
        row.fails_bound[k] = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace wavebound
