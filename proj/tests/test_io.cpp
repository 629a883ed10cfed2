#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wavebound/errors.hpp"
#include "wavebound/estimators.hpp"
#include "wavebound/io.hpp"

using namespace wavebound;

namespace {

std::vector<NamedProblem> parse(const std::string &text) {
  std::istringstream in(text);
  return io::parse_riemann_config(in);
}

std::string error_of(const std::string &text) {
  try {
    parse(text);
  } catch (const InvalidArgument &e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    out.push_back(l);
  return out;
}

const char *kSod = "# Sod\n"
                   "gamma = 1.4\n"
                   "[problem]\n"
                   "name = sod\n"
                   "rho_l = 1.0\n"
                   "u_l = 0.0   # at rest\n"
                   "p_l = 1.0\n"
                   "rho_r = 0.125\n"
                   "u_r = 0\n"
                   "p_r = 0.1\n";

} // namespace

TEST(Format, Numbers) {
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(io::format_fixed4(716.24354), "716.2435");
  EXPECT_EQ(io::format_fixed4(-2.72378), "-2.7238");
}

TEST(Config, ParsesBlock) {
  const auto p = parse(kSod);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].name, "sod");
  EXPECT_DOUBLE_EQ(p[0].problem.right.rho, 0.125);
  EXPECT_DOUBLE_EQ(p[0].problem.right.p, 0.1);
  EXPECT_DOUBLE_EQ(p[0].problem.gamma, 1.4);
}

TEST(Config, DefaultNamesAndGammaOverride) {
  const auto p = parse("gamma = 1.67\n"
                       "[problem]\nrho_l=1\nu_l=0\np_l=1\nrho_r=1\nu_r=0\np_r=1\n"
                       "[problem]\nrho_l=1\nu_l=0\np_l=1\nrho_r=1\nu_r=0\np_r=1\ngamma=1.2\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].name, "1");
  EXPECT_EQ(p[1].name, "2");
  EXPECT_DOUBLE_EQ(p[0].problem.gamma, 1.67);
  EXPECT_DOUBLE_EQ(p[1].problem.gamma, 1.2);
}

TEST(Config, Errors) {
  EXPECT_EQ(error_of(""), "config lists no Riemann problems");
  EXPECT_EQ(error_of("# nothing\n"), "config lists no Riemann problems");
  EXPECT_NE(error_of("[problem]\nrho_l=1\n").find("missing 'u_l'"), std::string::npos);
  EXPECT_NE(error_of("[problem]\nrho_l=1\nrho_l=2\n").find("line 3: duplicate key 'rho_l'"),
            std::string::npos);
  EXPECT_NE(error_of("[problem]\nspeed=1\n").find("line 2: unknown key 'speed'"),
            std::string::npos);
  EXPECT_NE(error_of("[problem]\nrho_l=abc\n").find("not a number"), std::string::npos);
  EXPECT_NE(error_of("[other]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(error_of("rho_l = 1\n").find("only 'gamma'"), std::string::npos);
  EXPECT_NE(error_of("[problem]\njunk\n").find("expected key = value"), std::string::npos);
  EXPECT_NE(error_of("[problem]\nrho_l=1\nu_l=0\np_l=-1\nrho_r=1\nu_r=0\np_r=1\n").find("line 1"),
            std::string::npos);
}

TEST(Config, RoundTripStandardProblems) {
  std::ostringstream out;
  io::write_riemann_config(out, standard_riemann_problems());
  const auto back = parse(out.str());
  const auto orig = standard_riemann_problems();
  ASSERT_EQ(back.size(), orig.size());
  for (std::size_t k = 0; k < orig.size(); ++k) {
    EXPECT_EQ(back[k].name, orig[k].name);
    EXPECT_EQ(back[k].problem.left.rho, orig[k].problem.left.rho);
    EXPECT_EQ(back[k].problem.right.p, orig[k].problem.right.p);
  }
}

TEST(Config, RoundTripRandomIsExact) {
  std::mt19937_64 rng(501);
  std::vector<NamedProblem> problems;
  for (int k = 0; k < 50; ++k)
    problems.push_back({"r" + std::to_string(k), oracle::random_problem(rng)});
  std::ostringstream out;
  io::write_riemann_config(out, problems);
  const auto back = parse(out.str());
  ASSERT_EQ(back.size(), problems.size());
  for (std::size_t k = 0; k < problems.size(); ++k) {
    const auto &a = problems[k].problem, &b = back[k].problem;
    EXPECT_EQ(a.left.rho, b.left.rho);
    EXPECT_EQ(a.left.u, b.left.u);
    EXPECT_EQ(a.left.p, b.left.p);
    EXPECT_EQ(a.right.rho, b.right.rho);
    EXPECT_EQ(a.right.u, b.right.u);
    EXPECT_EQ(a.right.p, b.right.p);
    EXPECT_EQ(a.gamma, b.gamma);
  }
}

TEST(EstimatorCsv, HeaderAndMask) {
  std::ostringstream out;
  io::write_estimator_table_csv(out, estimator_table(standard_riemann_problems()));
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0], "test,exact,davis_a,davis_b,toro,batten,einfeldt,bound_fail_mask");
  EXPECT_EQ(lines[1], "1,0.8039,0.3742,1.1832,0.8134,0.8775,0.8775,10000");
  EXPECT_EQ(lines[7], "7,2.7483,2.7483,2.7483,2.7483,2.7483,1.6000,00001");
}

TEST(EstimatorCsv, ErrorCellsPrintErr) {
  EstimatorRow row;
  row.name = "x";
  row.exact = 1.0;
  row.s_right = {1.5, std::nullopt, 1.5, 1.5, 0.5};
  row.fails_bound = {false, true, false, false, true};
  std::ostringstream out;
  io::write_estimator_table_csv(out, {row});
  EXPECT_EQ(lines_of(out.str())[1], "x,1.0000,1.5000,err,1.5000,1.5000,0.5000,01001");
}

TEST(ProfileCsv, OneRowPerCell) {
  const AdvectionResult r = advect_square_wave(20, 1.0, 0.5, 0.1);
  std::ostringstream prof, norms;
  io::write_profile_csv(prof, r);
  io::write_norms_csv(norms, std::span<const AdvectionResult>(&r, 1));
  const auto pl = lines_of(prof.str());
  ASSERT_EQ(pl.size(), 21u);
  EXPECT_EQ(pl[0], "x,q_numerical,q_exact");
  EXPECT_EQ(pl[1].substr(0, 6), "0.025,");
  const auto nl = lines_of(norms.str());
  ASSERT_EQ(nl.size(), 2u);
  EXPECT_EQ(nl[0], "beta,c,T,Linf,L1,qmax,qmin");
  EXPECT_EQ(nl[1].substr(0, 10), "1,0.5,0.1,");
}

TEST(BetaCurvesCsv, HeaderAndUnitCourantRow) {
  const std::vector<double> c = {0.5, 1.0};
  const std::vector<double> alphas = {2.0};
  std::ostringstream out;
  io::write_beta_curves_csv(out, c, alphas);
  const auto l = lines_of(out.str());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "c,beta_LW,beta_GU,beta_FO,beta_LF,beta_GC,beta_FTCS,beta_FA2");
  EXPECT_EQ(l[1], "0.5,0.5,1,1.25,2,1,0,1");
  EXPECT_EQ(l[2], "1,1,1,1,1,2,0,1.25");
}

TEST(StabilityOutput, CsvAndPgm) {
  StabilityMap m;
  m.cx_values = {0.0, 0.5, 1.0};
  m.cy_values = {0.0, 1.0};
  m.stable = {1, 1, 1, 0, 0, 0}; // (i, j) -> i * 2 + j
  std::ostringstream csv, pgm;
  io::write_stability_csv(csv, m);
  io::write_pgm(pgm, m);
  const auto cl = lines_of(csv.str());
  ASSERT_EQ(cl.size(), 7u);
  EXPECT_EQ(cl[0], "cx,cy,stable");
  EXPECT_EQ(cl[1], "0,0,1");
  EXPECT_EQ(cl[4], "0.5,1,0");
  const auto pl = lines_of(pgm.str());
  ASSERT_EQ(pl.size(), 5u);
  EXPECT_EQ(pl[0], "P2");
  EXPECT_EQ(pl[1], "3 2");
  EXPECT_EQ(pl[2], "255");
  EXPECT_EQ(pl[3], "255 0 0"); // top row is cy = 1
  EXPECT_EQ(pl[4], "255 255 0");
}

TEST(StabilityOutput, PgmLinesStayShort) {
  SweepConfig cfg;
  cfg.grid_n = 100;
  cfg.angle_n = 64;
  std::ostringstream pgm;
  io::write_pgm(pgm, stability_map_2d(1.25, cfg));
  std::size_t values = 0;
  for (const auto &l : lines_of(pgm.str())) {
    EXPECT_LT(l.size(), 70u);
    values += static_cast<std::size_t>(std::count(l.begin(), l.end(), ' ')) + 1;
  }
  EXPECT_EQ(values, 4u + 100u * 100u); // header: "P2", "100 100", "255"
}
