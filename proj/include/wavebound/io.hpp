#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wavebound/estimators.hpp"
#include "wavebound/schemes1d.hpp"
#include "wavebound/vonneumann.hpp"

namespace wavebound::io {

/// 9 significant digits, shortest form ("%.9g").
std::string format_number(double v);

/// 4 decimals, the precision of the reference wave-speed table.
std::string format_fixed4(double v);

/// Riemann problem list in flat key=value blocks:
///
///   # comment
///   gamma = 1.4        (optional default for the blocks below)
///   [problem]
///   name = 1           (optional, defaults to the block number)
///   rho_l = 1.0
///   u_l = 0.0
///   p_l = 1.0
///   rho_r = 1.0
///   u_r = 0.0
///   p_r = 0.1
///   gamma = 1.4        (optional override)
///
/// Throws InvalidArgument (with the line number) on malformed input,
/// missing keys, unknown keys, duplicates, or inadmissible states.
std::vector<NamedProblem> parse_riemann_config(std::istream &in);
void write_riemann_config(std::ostream &out, const std::vector<NamedProblem> &problems);

/// test,exact,davis_a,davis_b,toro,batten,einfeldt,bound_fail_mask
void write_estimator_table_csv(std::ostream &out, const std::vector<EstimatorRow> &rows);

/// x,q_numerical,q_exact
void write_profile_csv(std::ostream &out, const AdvectionResult &result);

/// beta,c,T,Linf,L1,qmax,qmin
void write_norms_csv(std::ostream &out, std::span<const AdvectionResult> results);

/// c,beta_LW,beta_GU,beta_FO,beta_LF,beta_GC,beta_FTCS,beta_FA<alpha>...
void write_beta_curves_csv(std::ostream &out, std::span<const double> c_samples,
                           std::span<const double> alphas);

/// cx,cy,stable
void write_stability_csv(std::ostream &out, const StabilityMap &map);

/// Plain PGM (P2), width = cx samples, height = cy samples, 255 = stable,
/// 0 = unstable. The first image row is the largest cy so the picture has
/// the usual axis orientation.
void write_pgm(std::ostream &out, const StabilityMap &map);

} // namespace wavebound::io
