// wavebound: command-line runner for the wave-speed and Rusanov-scheme experiments.
//
// Exit codes: 0 success, 2 flag/config error, 3 numerical failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavebound/errors.hpp"
#include "wavebound/estimators.hpp"
#include "wavebound/io.hpp"
#include "wavebound/schemes1d.hpp"
#include "wavebound/vonneumann.hpp"

namespace fs = std::filesystem;
using namespace wavebound;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::ofstream open_output(const fs::path &dir, const std::string &file) {
  fs::create_directories(dir);
  const fs::path path = dir / file;
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument("cannot write " + path.string());
  return out;
}

struct RiemannTableOptions {
  std::string config;
  std::string out_dir = ".";
};

void run_riemann_table(const RiemannTableOptions &opt) {
  std::vector<NamedProblem> problems;
  if (opt.config.empty()) {
    problems = standard_riemann_problems();
  } else {
    std::ifstream in(opt.config);
    if (!in)
      throw InvalidArgument("cannot read config " + opt.config);
    problems = io::parse_riemann_config(in);
  }
  std::ostringstream csv;
  io::write_estimator_table_csv(csv, estimator_table(problems));
  open_output(opt.out_dir, "riemann_table.csv") << csv.str();
  std::cout << csv.str();
}

struct Advect1dOptions {
  double beta = std::sqrt(2.0);
  double courant = 0.7;
  double output_time = 4.0;
  std::size_t cells = 200;
  std::string out_dir = ".";
};

void run_advect1d(const Advect1dOptions &opt) {
  const AdvectionResult r = advect_square_wave(opt.cells, opt.beta, opt.courant, opt.output_time);
  auto profile = open_output(opt.out_dir, "profile.csv");
  io::write_profile_csv(profile, r);
  auto norms = open_output(opt.out_dir, "norms.csv");
  io::write_norms_csv(norms, std::span<const AdvectionResult>(&r, 1));
  const bool unstable = std::max(std::abs(r.qmax), std::abs(r.qmin)) > kInstabilityThreshold;
  std::cout << "beta=" << io::format_number(r.beta) << " c=" << io::format_number(r.courant)
            << " T=" << io::format_number(r.output_time) << " steps=" << r.steps
            << " Linf=" << io::format_number(r.linf) << " L1=" << io::format_number(r.l1)
            << " qmax=" << io::format_number(r.qmax) << " qmin=" << io::format_number(r.qmin)
            << (unstable ? " UNSTABLE" : "") << '\n';
}

struct Stability1dOptions {
  std::size_t c_resolution = 512;
  std::size_t angles = 128;
  std::size_t curve_samples = 101;
  std::string out_dir = ".";
};

void run_stability1d(const Stability1dOptions &opt) {
  struct Entry {
    std::string family;
    double parameter;
    BetaSpec spec;
    double analytic;
  };
  std::vector<Entry> entries;
  for (double e : {0.25, 0.5, 0.75}) {
    const auto p = PerturbationSpec::under(e);
    entries.push_back({"under", e, p.as_beta_spec(), stability_limit(p)});
  }
  for (double e : {0.25, 0.5, 0.75, std::sqrt(2.0) - 1.0, 1.0}) {
    const auto p = PerturbationSpec::over(e);
    entries.push_back({"over", e, p.as_beta_spec(), stability_limit(p)});
  }
  for (const BetaSpec &s : {BetaSpec::upwind(), BetaSpec::lax_wendroff(), BetaSpec::lax_friedrichs(),
                            BetaSpec::force(), BetaSpec::godunov_centred(), BetaSpec::ftcs()})
    entries.push_back({s.name(), 0.0, s, stability_limit(s)});

  const double spacing = 1.0 / static_cast<double>(opt.c_resolution - 1);
  auto out = open_output(opt.out_dir, "stability1d.csv");
  out << "scheme,parameter,c_lim_analytic,c_lim_numeric,c_spacing\n";
  for (const Entry &e : entries) {
    const double numeric = stability_limit_1d_numeric(e.spec, opt.c_resolution, opt.angles);
    out << e.family << ',' << io::format_number(e.parameter) << ','
        << io::format_number(e.analytic) << ',' << io::format_number(numeric) << ','
        << io::format_number(spacing) << '\n';
  }

  auto curve = open_output(opt.out_dir, "stability_limit_curve.csv");
  curve << "epsilon,c_lim_under,c_lim_over\n";
  for (std::size_t k = 0; k < opt.curve_samples; ++k) {
    const double eps = static_cast<double>(k) / static_cast<double>(opt.curve_samples - 1);
    curve << io::format_number(eps) << ','
          << io::format_number(stability_limit(PerturbationSpec::under(eps))) << ','
          << io::format_number(stability_limit(PerturbationSpec::over(eps))) << '\n';
  }
  std::cout << "wrote stability1d.csv and stability_limit_curve.csv to " << opt.out_dir << '\n';
}

struct Stability2dOptions {
  std::vector<double> betas = {1.25, 1.5, 1.75, 0.75, 0.5, 0.25};
  std::vector<double> alphas;
  SweepConfig sweep;
  std::string out_dir = ".";
};

void write_map(const fs::path &dir, const std::string &stem, const StabilityMap &map) {
  auto csv = open_output(dir, stem + ".csv");
  io::write_stability_csv(csv, map);
  auto pgm = open_output(dir, stem + ".pgm");
  io::write_pgm(pgm, map);
}

void run_stability2d(const Stability2dOptions &opt) {
  validate(opt.sweep);
  auto areas = open_output(opt.out_dir, "areas.csv");
  areas << "beta,area_fraction\n";
  for (double beta : opt.betas) {
    const BetaSpec spec = BetaSpec::constant(beta);
    const StabilityMap map = stability_map_2d(spec, spec, opt.sweep);
    write_map(opt.out_dir, "map_" + spec.name(), map);
    areas << io::format_number(beta) << ',' << io::format_number(region_area(map)) << '\n';
    std::cout << spec.name() << ": area=" << io::format_number(region_area(map))
              << " cx_intercept=" << io::format_number(axis_intercept_x(map))
              << " cy_intercept=" << io::format_number(axis_intercept_y(map)) << '\n';
  }
  if (opt.alphas.empty())
    return;
  auto fa_areas = open_output(opt.out_dir, "areas_force_alpha.csv");
  fa_areas << "alpha,area_fraction\n";
  for (double alpha : opt.alphas) {
    const BetaSpec spec = BetaSpec::force_alpha(alpha);
    const StabilityMap map = stability_map_2d(spec, spec, opt.sweep);
    write_map(opt.out_dir, "map_" + spec.name(), map);
    fa_areas << io::format_number(alpha) << ',' << io::format_number(region_area(map)) << '\n';
    std::cout << spec.name() << ": area=" << io::format_number(region_area(map))
              << " cx_intercept=" << io::format_number(axis_intercept_x(map))
              << " cy_intercept=" << io::format_number(axis_intercept_y(map)) << '\n';
  }
}

struct BetaCurvesOptions {
  std::size_t samples = 100;
  std::vector<double> alphas = {2.0, 3.0, 4.0, 5.0};
  std::string out_dir = ".";
};

void run_beta_curves(const BetaCurvesOptions &opt) {
  std::vector<double> c(opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k)
    c[k] = static_cast<double>(k + 1) / static_cast<double>(opt.samples);
  auto out = open_output(opt.out_dir, "beta_curves.csv");
  io::write_beta_curves_csv(out, c, opt.alphas);
  std::cout << "wrote beta_curves.csv (" << opt.samples << " rows) to " << opt.out_dir << '\n';
}

struct ForceAlphaOptions {
  std::vector<double> alphas = {1.0, 2.0, 3.0, 4.0, 5.0};
  std::size_t c_resolution = 512;
  std::size_t angles = 128;
  std::string out_dir = ".";
};

void run_force_alpha(const ForceAlphaOptions &opt) {
  auto out = open_output(opt.out_dir, "force_alpha.csv");
  out << "alpha,c_lim_analytic,c_lim_numeric\n";
  for (double alpha : opt.alphas) {
    const BetaSpec spec = BetaSpec::force_alpha(alpha);
    out << io::format_number(alpha) << ',' << io::format_number(stability_limit(spec)) << ','
        << io::format_number(stability_limit_1d_numeric(spec, opt.c_resolution, opt.angles))
        << '\n';
  }
  std::cout << "wrote force_alpha.csv to " << opt.out_dir << '\n';
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Wave-speed estimates and Rusanov-type scheme analysis"};
  app.require_subcommand(1);

  RiemannTableOptions rt;
  auto *riemann = app.add_subcommand("riemann-table", "Exact vs estimated maximal wave speeds");
  riemann->add_option("--config", rt.config, "Riemann problem list (key=value blocks)")
      ->check(CLI::ExistingFile);
  riemann->add_option("--out", rt.out_dir, "Output directory");

  Advect1dOptions ad;
  auto *advect = app.add_subcommand("advect1d", "Square-wave advection with a constant-beta scheme");
  advect->add_option("--beta", ad.beta, "Wave-speed coefficient")->check(CLI::NonNegativeNumber)->capture_default_str();
  advect->add_option("--c", ad.courant, "Courant number")->check(CLI::PositiveNumber)->capture_default_str();
  advect->add_option("--t-out", ad.output_time, "Output time")->check(CLI::NonNegativeNumber)->capture_default_str();
  advect->add_option("--cells", ad.cells, "Number of cells")->check(CLI::Range(1, 100000000))->capture_default_str();
  advect->add_option("--out", ad.out_dir, "Output directory");

  Stability1dOptions s1;
  auto *stab1 = app.add_subcommand("stability1d", "Numeric vs analytic 1D stability limits");
  stab1->add_option("--c-res", s1.c_resolution, "Courant samples")->check(CLI::Range(64, 1000000))->capture_default_str();
  stab1->add_option("--angles", s1.angles, "Phase-angle samples")->check(CLI::Range(64, 1000000))->capture_default_str();
  stab1->add_option("--curve-samples", s1.curve_samples, "Samples of the c_lim(eps) curve")->check(CLI::Range(2, 1000000))->capture_default_str();
  stab1->add_option("--out", s1.out_dir, "Output directory");

  Stability2dOptions s2;
  auto *stab2 = app.add_subcommand("stability2d", "2D von Neumann stability maps");
  stab2->add_option("--beta", s2.betas, "Constant beta values (beta_x = beta_y)")->check(CLI::NonNegativeNumber)->delimiter(',');
  stab2->add_option("--alpha", s2.alphas, "FORCE-alpha parameters")->check(CLI::PositiveNumber)->delimiter(',');
  stab2->add_option("--grid", s2.sweep.grid_n, "Courant samples per axis")->check(CLI::Range(64, 100000))->capture_default_str();
  stab2->add_option("--angles", s2.sweep.angle_n, "Phase-angle samples per axis")->check(CLI::Range(64, 100000))->capture_default_str();
  stab2->add_option("--cmax", s2.sweep.cx_max, "Courant range [0, cmax] on both axes")->check(CLI::PositiveNumber)->capture_default_str();
  stab2->add_option("--tol", s2.sweep.tol, "Tolerance on |G| - 1")->check(CLI::NonNegativeNumber)->capture_default_str();
  stab2->add_option("--out", s2.out_dir, "Output directory");

  BetaCurvesOptions bc;
  auto *curves = app.add_subcommand("beta-curves", "beta(c) for the classical schemes and FORCE-alpha");
  curves->add_option("--samples", bc.samples, "Courant samples in (0, 1]")->check(CLI::Range(1, 10000000))->capture_default_str();
  curves->add_option("--alpha", bc.alphas, "FORCE-alpha parameters")->check(CLI::PositiveNumber)->delimiter(',');
  curves->add_option("--out", bc.out_dir, "Output directory");

  ForceAlphaOptions fa;
  auto *force = app.add_subcommand("force-alpha", "FORCE-alpha stability limits");
  force->add_option("--alpha", fa.alphas, "FORCE-alpha parameters")->check(CLI::PositiveNumber)->delimiter(',');
  force->add_option("--c-res", fa.c_resolution, "Courant samples")->check(CLI::Range(64, 1000000))->capture_default_str();
  force->add_option("--angles", fa.angles, "Phase-angle samples")->check(CLI::Range(64, 1000000))->capture_default_str();
  force->add_option("--out", fa.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*riemann)
      run_riemann_table(rt);
    else if (*advect)
      run_advect1d(ad);
    else if (*stab1)
      run_stability1d(s1);
    else if (*stab2) {
      s2.sweep.cy_max = s2.sweep.cx_max;
      if (s2.betas.empty() && s2.alphas.empty())
        throw InvalidArgument("stability2d needs at least one --beta or --alpha");
      run_stability2d(s2);
    } else if (*curves)
      run_beta_curves(bc);
    else if (*force)
      run_force_alpha(fa);
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError &e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const fs::filesystem_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
