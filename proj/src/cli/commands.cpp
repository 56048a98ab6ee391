#include <cmath>
#include <algorithm>
#include <exception>
#include <functional>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graetz/cli.hpp"
#include "graetz/errors.hpp"
#include "graetz/oracle.hpp"
#include "graetz/series.hpp"

namespace graetz::cli {

Table cmd_eigen(std::size_t count, const SolverConfig& config) {
  if (count == 0) throw DomainError("eigen: count must be at least 1");
  const SeriesSolution sol = build_solution(count, config);
  Table t{{"n", "lambda", "lambda_sq", "C_n", "dR_dr_at_1"}, {true, false, false, false, false}, {}};
  for (const auto& m : sol.modes())
    t.rows.push_back({static_cast<double>(m.index), m.lambda, m.lambda * m.lambda, *m.coefficient, m.wall_slope});
  return t;
}

Table cmd_profile(double z, std::size_t nr, const SolverConfig& config) {
  if (!(z >= 0.0)) throw DomainError("profile: z must be non-negative");
  if (nr < 2) throw DomainError("profile: nr must be at least 2");
  const SeriesSolution sol = build_solution(config.mode_count, config);
  std::vector<double> r(nr);
  for (std::size_t i = 0; i < nr; ++i) r[i] = static_cast<double>(i) / static_cast<double>(nr - 1);
  const double zs[] = {z};
  const FieldGrid g = sample_field(sol, r, zs);
  Table t{{"r", "T"}, {false, false}, {}};
  for (std::size_t i = 0; i < nr; ++i) t.rows.push_back({r[i], g.value(0, i)});
  return t;
}

Table cmd_nusselt(double z_min, double z_max, std::size_t points, const SolverConfig& config) {
  if (!(z_min > 0.0) || !(z_max > z_min)) throw DomainError("nusselt: need 0 < zmin < zmax");
  if (points < 2) throw DomainError("nusselt: points must be at least 2");
  const SeriesSolution sol = build_solution(config.mode_count, config);
  const double l0 = std::log(z_min), l1 = std::log(z_max);
  Table t{{"z", "T_bulk", "Nu"}, {false, false, false}, {}};
  for (std::size_t k = 0; k < points; ++k) {
    double z = std::exp(l0 + (l1 - l0) * static_cast<double>(k) / static_cast<double>(points - 1));
    if (k == 0) z = z_min;
    if (k + 1 == points) z = z_max;
    t.rows.push_back({z, bulk_temperature(sol, z), local_nusselt(sol, z)});
  }
  return t;
}

bool ValidationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

ValidationReport cmd_validate(const SolverConfig& config, const OracleConfig& oracle) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  ValidationReport report;

  CheckResult eig{"eigenvalues", nan, kEigenvalueTolerance, false, {}};
  try {
    const std::size_t n = std::min<std::size_t>(5, config.mode_count);
    const Spectrum s = compute_spectrum(n, config);
    const auto shot = shoot_eigenvalues(n, oracle);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::fabs(s.modes[i].lambda - shot[i]));
    eig.measured = err;
    eig.passed = err <= kEigenvalueTolerance;
  } catch (const std::exception& e) {
    eig.detail = e.what();
  }
  report.checks.push_back(eig);

  CheckResult field{"field", nan, kFieldTolerance, false, {}};
  try {
    const SeriesSolution sol = build_solution(config.mode_count, config);
    const FieldGrid fd = fd_march(oracle);
    const double err = compare_fields(sol, fd, kFieldZMin);
    field.measured = err;
    field.passed = err <= kFieldTolerance;
  } catch (const std::exception& e) {
    field.detail = e.what();
  }
  report.checks.push_back(field);
  return report;
}

void write_report(const ValidationReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json o;
      o["check"] = c.name;
      o["status"] = c.passed ? "PASS" : "FAIL";
      o["measured"] = std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nullptr;
      o["tolerance"] = c.tolerance;
      if (!c.detail.empty()) o["detail"] = c.detail;
      doc.push_back(std::move(o));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "check,status,measured,tolerance\n";
  for (const auto& c : report.checks)
    out << c.name << ',' << (c.passed ? "PASS" : "FAIL") << ',' << format_number(c.measured) << ','
        << format_number(c.tolerance) << '\n';
}

namespace {

struct Options {
  SolverConfig solver;
  OracleConfig oracle;
  std::string format = "csv";
  std::string output;
  std::size_t count = 0;
  double z = 0.0;
  std::size_t nr = 101;
  double z_min = 0.01;
  double z_max = 1.0;
  std::size_t points = 20;
};

int emit(const Options& opt, const std::function<void(std::ostream&)>& body, std::ostream& out,
         std::ostream& err) {
  if (opt.output.empty()) {
    body(out);
    return kExitOk;
  }
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << opt.output << " for writing\n";
    return kExitUsage;
  }
  body(file);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Graetz problem: eigenfunction-expansion solver and brute-force validators", "graetz"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--modes", opt.solver.mode_count, "Series truncation (number of modes)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--root-tol", opt.solver.root_tol, "Bisection width for eigenvalues")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--quad-order", opt.solver.quadrature_order, "Gauss-Legendre order for coefficients")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(512)))
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Output file (default: standard output)");

  auto* eigen = app.add_subcommand("eigen", "Eigenvalue table");
  eigen->add_option("--count", opt.count, "Number of modes (default: --modes)")->check(CLI::PositiveNumber);

  auto* profile = app.add_subcommand("profile", "Radial temperature profile at one axial station");
  profile->add_option("--z", opt.z, "Axial position")->required()->check(CLI::NonNegativeNumber);
  profile->add_option("--nr", opt.nr, "Radial points")->check(CLI::Range(static_cast<std::size_t>(2),
                                                                         std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();

  auto* nusselt = app.add_subcommand("nusselt", "Bulk temperature and local Nusselt number");
  nusselt->add_option("--zmin", opt.z_min, "First axial station")->check(CLI::PositiveNumber)->capture_default_str();
  nusselt->add_option("--zmax", opt.z_max, "Last axial station")->check(CLI::PositiveNumber)->capture_default_str();
  nusselt->add_option("--points", opt.points, "Log-spaced stations")
      ->check(CLI::Range(static_cast<std::size_t>(2), std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Cross-check against the shooting and finite-difference oracles");
  validate->add_option("--fd-nr", opt.oracle.fd_nr, "Finite-difference radial points")->capture_default_str();
  validate->add_option("--fd-nz", opt.oracle.fd_nz, "Finite-difference axial points")->capture_default_str();
  validate->add_option("--fd-zmax", opt.oracle.fd_zmax, "Finite-difference axial extent")->capture_default_str();
  validate->add_option("--rk4-step", opt.oracle.rk4_step, "Shooting radial step")->capture_default_str();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
    if (nusselt->parsed() && !(opt.z_max > opt.z_min))
      throw CLI::ValidationError("--zmax", "must exceed --zmin");
    opt.solver.validate();
    if (validate->parsed()) opt.oracle.validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const Format format = opt.format == "json" ? Format::json : Format::csv;
  try {
    if (eigen->parsed()) {
      const Table t = cmd_eigen(opt.count ? opt.count : opt.solver.mode_count, opt.solver);
      return emit(opt, [&](std::ostream& os) { write_table(t, format, os); }, out, err);
    }
    if (profile->parsed()) {
      const Table t = cmd_profile(opt.z, opt.nr, opt.solver);
      return emit(opt, [&](std::ostream& os) { write_table(t, format, os); }, out, err);
    }
    if (nusselt->parsed()) {
      const Table t = cmd_nusselt(opt.z_min, opt.z_max, opt.points, opt.solver);
      return emit(opt, [&](std::ostream& os) { write_table(t, format, os); }, out, err);
    }
    const ValidationReport report = cmd_validate(opt.solver, opt.oracle);
    const int io = emit(opt, [&](std::ostream& os) { write_report(report, format, os); }, out, err);
    if (io != kExitOk) return io;
    for (const auto& c : report.checks) {
      if (!c.passed) {
        err << "validation failed: " << c.name;
        if (!c.detail.empty()) err << ": " << c.detail;
        err << '\n';
      }
    }
    return report.passed() ? kExitOk : kExitNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace graetz::cli
