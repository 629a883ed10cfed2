#pragma once

// Single-threaded reference versions of the parallel kernels. They are
// written for clarity, not speed, and exist so tests and the benchmark can
// check the OpenMP kernels against them.

#include <span>
#include <vector>

#include "wavebound/schemes1d.hpp"
#include "wavebound/schemes2d.hpp"
#include "wavebound/vonneumann.hpp"

namespace wavebound::serial {

std::vector<double> step(std::span<const double> q, const SchemeCoefficients1D &coeffs);

Field2D step_2d(const Field2D &q, const SchemeCoefficients2D &coeffs);

/// Evaluates |G| through amplification_2d at every angle pair (no early exit).
StabilityMap stability_map_2d(const BetaSpec &beta_x, const BetaSpec &beta_y,
                              const SweepConfig &config = {});

} // namespace wavebound::serial
