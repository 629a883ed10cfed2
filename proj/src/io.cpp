#include "wavebound/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>

#include "wavebound/errors.hpp"

namespace wavebound::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void config_error(std::size_t line, const std::string &what) {
  throw InvalidArgument("config line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    config_error(line, "not a number: '" + std::string(text) + "'");
  return v;
}

constexpr std::array<std::string_view, 6> kStateKeys = {"rho_l", "u_l", "p_l",
                                                        "rho_r", "u_r", "p_r"};

struct Block {
  std::size_t header_line = 0;
  std::string name;
  std::map<std::string, double, std::less<>> values;
  std::optional<double> gamma;
};

NamedProblem finish(const Block &b, double default_gamma, std::size_t index) {
  for (std::string_view key : kStateKeys)
    if (!b.values.contains(key))
      config_error(b.header_line, "problem block is missing '" + std::string(key) + "'");
  NamedProblem np;
  np.name = b.name.empty() ? std::to_string(index) : b.name;
  const auto &v = b.values;
  np.problem.left = {v.find("rho_l")->second, v.find("u_l")->second, v.find("p_l")->second};
  np.problem.right = {v.find("rho_r")->second, v.find("u_r")->second, v.find("p_r")->second};
  np.problem.gamma = b.gamma.value_or(default_gamma);
  try {
    validate(np.problem);
  } catch (const InvalidArgument &e) {
    config_error(b.header_line, e.what());
  }
  return np;
}

// Shortest text that parses back to the same double.
std::string format_exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

} // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9g", v);
  return buf.data();
}

std::string format_fixed4(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.4f", v);
  return buf.data();
}

std::vector<NamedProblem> parse_riemann_config(std::istream &in) {
  double default_gamma = 1.4;
  bool gamma_seen = false;
  std::vector<Block> blocks;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (line == "[problem]") {
      blocks.push_back({});
      blocks.back().header_line = line_no;
      continue;
    }
    if (line.front() == '[')
      config_error(line_no, "unknown section '" + std::string(line) + "'");
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      config_error(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      config_error(line_no, "expected key = value");

    if (blocks.empty()) {
      if (key != "gamma")
        config_error(line_no, "only 'gamma' may appear before the first [problem]");
      if (gamma_seen)
        config_error(line_no, "duplicate key 'gamma'");
      default_gamma = parse_double(value, line_no);
      gamma_seen = true;
      continue;
    }
    Block &b = blocks.back();
    if (key == "name") {
      if (!b.name.empty())
        config_error(line_no, "duplicate key 'name'");
      b.name = std::string(value);
    } else if (key == "gamma") {
      if (b.gamma)
        config_error(line_no, "duplicate key 'gamma'");
      b.gamma = parse_double(value, line_no);
    } else {
      bool known = false;
      for (std::string_view k : kStateKeys)
        known = known || k == key;
      if (!known)
        config_error(line_no, "unknown key '" + key + "'");
      if (!b.values.emplace(key, parse_double(value, line_no)).second)
        config_error(line_no, "duplicate key '" + key + "'");
    }
  }
  if (blocks.empty())
    throw InvalidArgument("config lists no Riemann problems");
  std::vector<NamedProblem> problems;
  problems.reserve(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    problems.push_back(finish(blocks[k], default_gamma, k + 1));
  return problems;
}

void write_riemann_config(std::ostream &out, const std::vector<NamedProblem> &problems) {
  for (const NamedProblem &np : problems) {
    const RiemannProblem &rp = np.problem;
    out << "[problem]\n"
        << "name = " << np.name << '\n'
        << "rho_l = " << format_exact(rp.left.rho) << '\n'
        << "u_l = " << format_exact(rp.left.u) << '\n'
        << "p_l = " << format_exact(rp.left.p) << '\n'
        << "rho_r = " << format_exact(rp.right.rho) << '\n'
        << "u_r = " << format_exact(rp.right.u) << '\n'
        << "p_r = " << format_exact(rp.right.p) << '\n'
        << "gamma = " << format_exact(rp.gamma) << "\n\n";
  }
}

void write_estimator_table_csv(std::ostream &out, const std::vector<EstimatorRow> &rows) {
  out << "test,exact";
  for (EstimatorId id : kTableOrder)
    out << ',' << to_string(id);
  out << ",bound_fail_mask\n";
  for (const EstimatorRow &row : rows) {
    out << row.name << ',' << format_fixed4(row.exact);
    std::string mask;
    for (std::size_t k = 0; k < kTableOrder.size(); ++k) {
      out << ',' << (row.s_right[k] ? format_fixed4(*row.s_right[k]) : std::string("err"));
      mask += row.fails_bound[k] ? '1' : '0';
    }
    out << ',' << mask << '\n';
  }
}

void write_profile_csv(std::ostream &out, const AdvectionResult &r) {
  out << "x,q_numerical,q_exact\n";
  for (std::size_t i = 0; i < r.q.size(); ++i)
    out << format_number(r.x[i]) << ',' << format_number(r.q[i]) << ','
        << format_number(r.q_exact[i]) << '\n';
}

void write_norms_csv(std::ostream &out, std::span<const AdvectionResult> results) {
  out << "beta,c,T,Linf,L1,qmax,qmin\n";
  for (const AdvectionResult &r : results)
    out << format_number(r.beta) << ',' << format_number(r.courant) << ','
        << format_number(r.output_time) << ',' << format_number(r.linf) << ','
        << format_number(r.l1) << ',' << format_number(r.qmax) << ',' << format_number(r.qmin)
        << '\n';
}

void write_beta_curves_csv(std::ostream &out, std::span<const double> c_samples,
                           std::span<const double> alphas) {
  const std::array<BetaSpec, 6> classical = {
      BetaSpec::lax_wendroff(),    BetaSpec::upwind(),          BetaSpec::force(),
      BetaSpec::lax_friedrichs(), BetaSpec::godunov_centred(), BetaSpec::ftcs()};
  std::vector<BetaSpec> specs(classical.begin(), classical.end());
  for (double a : alphas)
    specs.push_back(BetaSpec::force_alpha(a));

  out << 'c';
  for (const BetaSpec &s : specs)
    out << ",beta_" << s.name();
  out << '\n';
  for (double c : c_samples) {
    out << format_number(c);
    for (const BetaSpec &s : specs)
      out << ',' << format_number(s.beta(c));
    out << '\n';
  }
}

void write_stability_csv(std::ostream &out, const StabilityMap &map) {
  out << "cx,cy,stable\n";
  for (std::size_t i = 0; i < map.nx(); ++i)
    for (std::size_t j = 0; j < map.ny(); ++j)
      out << format_number(map.cx_values[i]) << ',' << format_number(map.cy_values[j]) << ','
          << (map.at(i, j) ? 1 : 0) << '\n';
}

void write_pgm(std::ostream &out, const StabilityMap &map) {
  out << "P2\n" << map.nx() << ' ' << map.ny() << "\n255\n";
  for (std::size_t row = 0; row < map.ny(); ++row) {
    const std::size_t j = map.ny() - 1 - row;
    // plain PGM lines should stay under 70 characters
    for (std::size_t i = 0; i < map.nx(); ++i) {
      const bool line_start = i % 16 == 0;
      if (line_start && i > 0)
        out << '\n';
      out << (line_start ? "" : " ") << (map.at(i, j) ? 255 : 0);
    }
    out << '\n';
  }
}

} // namespace wavebound::io
