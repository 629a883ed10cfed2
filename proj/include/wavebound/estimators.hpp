#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavebound/euler.hpp"

namespace wavebound {

enum class EstimatorId { DavisA, DavisB, Einfeldt, Batten, Toro };

/// Column order of the maximal-wave-speed table.
inline constexpr std::array<EstimatorId, 5> kTableOrder = {
    EstimatorId::DavisA, EstimatorId::DavisB, EstimatorId::Toro, EstimatorId::Batten,
    EstimatorId::Einfeldt};

std::string_view to_string(EstimatorId id);

/// (u_L - c_L, u_R + c_R)
WaveSpeedPair davis_a(const RiemannProblem &rp);

/// Componentwise min/max of the one-sided eigenvalues.
WaveSpeedPair davis_b(const RiemannProblem &rp);

/// Roe-averaged velocity plus/minus the Einfeldt speed d~.
WaveSpeedPair einfeldt(const RiemannProblem &rp);

/// Roe-averaged sound speed combined with the one-sided eigenvalues.
/// Throws ImaginarySoundSpeed when the averaged enthalpy gives c~^2 <= 0.
WaveSpeedPair batten(const RiemannProblem &rp);

/// Star pressure assuming both waves are rarefactions. Never below the exact
/// star pressure, and equal to it when both waves really are rarefactions.
double two_rarefaction_pressure(const RiemannProblem &rp);

/// Shock/rarefaction-aware estimate driven by the two-rarefaction pressure.
/// Bounds the exact wave speeds for ideal gases.
WaveSpeedPair toro(const RiemannProblem &rp);

WaveSpeedPair estimate(EstimatorId id, const RiemannProblem &rp);

/// Single speed for the Rusanov flux: max(|S_L|, |S_R|).
double rusanov_speed(const WaveSpeedPair &pair);

/// One row of the maximal-wave-speed table. A missing estimate means the
/// estimator raised a numerical error for this problem.
struct EstimatorRow {
  std::string name;
  double exact = 0.0;
  std::array<std::optional<double>, 5> s_right; // kTableOrder
  std::array<bool, 5> fails_bound{};            // kTableOrder
  std::array<std::string, 5> error;             // kTableOrder
};

/// Estimates count as failing to bound the exact speed when they fall below it
/// by more than this; it matches the four-decimal table precision.
inline constexpr double kBoundTolerance = 5e-4;

/// Exact and estimated right speeds for each problem. Exact-solver failures
/// propagate; estimator failures are recorded per cell.
std::vector<EstimatorRow> estimator_table(const std::vector<NamedProblem> &problems);

} // namespace wavebound
