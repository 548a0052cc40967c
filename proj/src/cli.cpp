#include "emax/cli.hpp"

#include "emax/moduli.hpp"
#include "emax/parallel.hpp"
#include "emax/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace emax {

namespace {

int require_genus(const RunConfig& config) {
  if (!config.genus) throw UsageError(config.command + " needs --genus");
  return *config.genus;
}

Rational read_rational(const std::optional<std::string>& text, const char* flag, Report& report) {
  if (!text) throw UsageError(report.command + " needs --" + std::string(flag));
  ParsedRational parsed;
  try {
    parsed = parse_rational(*text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
  report.inputs[flag] = to_string(parsed.value);
  if (parsed.from_decimal) {
    report.inputs[std::string(flag) + "_input"] = parsed.text;
    report.warnings.push_back(std::string(flag) + "=" + parsed.text + " read as " + to_string(parsed.value));
  }
  return parsed.value;
}

RuledSurface surface_inputs(const RunConfig& config, int genus, Report& report) {
  RuledSurface surface = make_surface(genus, config.degree);
  report.inputs["genus"] = genus;
  report.inputs["degree"] = config.degree;
  report.inputs["s_sigma"] = to_string(surface.s_sigma);
  return surface;
}

SolveOptions solve_options(const RunConfig& config) { return SolveOptions{config.precision_bits}; }

void build_solve(const RunConfig& config, Report& report, const Formatter& fmt) {
  auto surface = surface_inputs(config, require_genus(config), report);
  Rational x = read_rational(config.x, "x", report);
  report.results = candidate_detail(solve_case1(x, surface, solve_options(config)), surface, fmt);
}

void build_case2(const RunConfig& config, Report& report, const Formatter& fmt) {
  auto surface = surface_inputs(config, config.genus.value_or(0), report);
  Rational x = read_rational(config.x, "x", report);
  Json rows = Json::array();
  for (const auto& cand : solve_case2(x, surface, solve_options(config))) {
    Json row = Json::object();
    row["branch"] = std::string(to_string(cand.solution_case));
    const Json detail = candidate_detail(cand, surface, fmt);
    row.update(detail);
    rows.push_back(std::move(row));
  }
  if (rows.size() == 1) report.warnings.push_back("x = 4/5: the two branches coincide with the Case 1 solution b = 2");
  report.results["rows"] = std::move(rows);
}

void build_thresholds(const RunConfig& config, Report& report, const Formatter& fmt) {
  auto surface = surface_inputs(config, require_genus(config), report);
  Thresholds t = thresholds(surface);
  const double s = to_double(surface.s_sigma);
  report.results["s_sigma"] = to_string(surface.s_sigma);
  report.results["x1"] = fmt.number(t.x1);
  report.results["x2"] = fmt.number(t.x2);
  report.results["x2_lower_bound"] = fmt.number(1 / (s * s + 2));
}

void build_sweep(const RunConfig& config, Report& report, const Formatter& fmt) {
  auto surface = surface_inputs(config, require_genus(config), report);
  report.inputs["samples"] = config.samples;
  const auto options = solve_options(config);
  std::vector<Json> rows(static_cast<std::size_t>(config.samples));
  parallel_for(rows.size(), [&](std::size_t i) {
    Rational x(static_cast<long>(i) + 1, config.samples + 1);
    rows[i] = candidate_row(solve_case1(x, surface, options), surface, fmt);
  });
  report.results["rows"] = Json(rows);
}

void build_moduli(const RunConfig& config, Report& report, const Formatter& fmt) {
  const int genus = require_genus(config);
  Manifold manifold;
  if (config.manifold == "product") {
    manifold = Manifold::Product;
  } else if (config.manifold == "twisted") {
    manifold = Manifold::Twisted;
  } else {
    throw UsageError("--manifold must be product or twisted");
  }
  report.inputs["manifold"] = config.manifold;
  report.inputs["genus"] = genus;
  Rational p = read_rational(config.p, "p", report);
  ModuliScan scan = enumerate_components(manifold, genus, p, solve_options(config));
  report.results["distinct_count"] = scan.distinct_count;
  Json rows = Json::array();
  for (const auto& e : scan.entries) rows.push_back(moduli_row(e, fmt));
  report.results["rows"] = std::move(rows);
  for (auto& w : scan.warnings) report.warnings.push_back(std::move(w));
}

bool build_verify(const RunConfig& config, Report& report, const Formatter& fmt) {
  report.inputs["samples"] = config.samples;
  report.inputs["tol"] = config.tol;
  VerifyOptions options;
  options.samples = config.samples;
  options.tol = config.tol;
  options.solve = solve_options(config);
  auto checks = run_verification(options);
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  report.results["passed"] = passed;
  report.results["failed"] = static_cast<long>(checks.size()) - passed;
  Json rows = Json::array();
  for (const auto& c : checks) {
    Json row = Json::object();
    row["check"] = c.name;
    row["passed"] = c.passed;
    row["cases"] = c.cases;
    row["worst_error"] = fmt.number(c.worst);
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
  }
  report.results["rows"] = std::move(rows);
  return passed == static_cast<long>(checks.size());
}

void validate(const RunConfig& config) {
  if (config.samples < 3) throw UsageError("--samples must be >= 3");
  if (!(config.tol > 0)) throw UsageError("--tol must be > 0");
  if (config.precision < 1 || config.precision > 17) throw UsageError("--precision must be in [1, 17]");
  if (config.format != "json" && config.format != "csv") throw UsageError("--format must be json or csv");
}

}  // namespace

Report build_report(const RunConfig& config) {
  validate(config);
  Report report;
  report.command = config.command;
  const Formatter fmt(config.precision);
  if (config.command == "solve") {
    build_solve(config, report, fmt);
  } else if (config.command == "case2") {
    build_case2(config, report, fmt);
  } else if (config.command == "thresholds") {
    build_thresholds(config, report, fmt);
  } else if (config.command == "sweep") {
    build_sweep(config, report, fmt);
  } else if (config.command == "moduli") {
    build_moduli(config, report, fmt);
  } else if (config.command == "verify") {
    report.results["all_passed"] = false;
    report.results["all_passed"] = build_verify(config, report, fmt);
  } else {
    throw UsageError("unknown command '" + config.command + "'");
  }
  return report;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = build_report(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerify;
  }

  const std::string text = config.format == "csv" ? to_csv(report) : to_json(report);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!(file << text)) {
      err << "usage error: cannot write " << *config.out << "\n";
      return kExitUsage;
    }
  } else {
    out << text;
  }
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";

  if (config.command == "verify" && !report.results["all_passed"].get<bool>()) return kExitVerify;
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Einstein-Maxwell metrics on admissible ruled surfaces"};
  app.require_subcommand(1);

  int genus = 0;
  std::string x, p;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--precision", config.precision, "significant digits in output")->check(CLI::Range(1, 17));
    sub->add_option("--out", config.out, "write the report to this file");
  };
  auto add_surface = [&](CLI::App* sub, bool genus_required) {
    auto* g = sub->add_option("--genus", genus, "genus of the base curve")->check(CLI::NonNegativeNumber);
    if (genus_required) g->required();
    sub->add_option("--degree", config.degree, "degree n of the line bundle")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "Case 1 solution for one Kahler class");
  add_surface(solve, true);
  solve->add_option("--x", x, "class parameter, e.g. 3/5 or 0.6")->required();
  add_common(solve);

  auto* case2 = app.add_subcommand("case2", "both Case 2 branches on the first Hirzebruch surface");
  add_surface(case2, false);
  case2->add_option("--x", x, "class parameter in [4/5, 1)")->required();
  add_common(case2);

  auto* thr = app.add_subcommand("thresholds", "positivity thresholds for negative s_sigma");
  add_surface(thr, true);
  add_common(thr);

  auto* sweep = app.add_subcommand("sweep", "Case 1 over the grid x = i/(samples + 1)");
  add_surface(sweep, true);
  sweep->add_option("--samples", config.samples, "grid size")->check(CLI::Range(3, 10000000));
  add_common(sweep);

  auto* moduli = app.add_subcommand("moduli", "components for the class 4 pi (E + p C)");
  moduli->add_option("--manifold", config.manifold, "product or twisted")
      ->check(CLI::IsMember({"product", "twisted"}));
  moduli->add_option("--genus", genus, "genus of the base curve")->required()->check(CLI::PositiveNumber);
  moduli->add_option("--p", p, "class parameter, e.g. 5/2")->required();
  add_common(moduli);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--samples", config.samples, "z samples for pointwise checks")->check(CLI::Range(3, 1000000));
  verify->add_option("--tol", config.tol, "tolerance for algebraic identities")->check(CLI::PositiveNumber);
  add_common(verify);

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (auto* opt = chosen->get_option_no_throw("--genus"); opt && opt->count() > 0) config.genus = genus;
  if (!x.empty()) config.x = x;
  if (!p.empty()) config.p = p;

  if (const char* bits = std::getenv("EMAX_PRECISION_BITS")) {
    char* end = nullptr;
    long value = std::strtol(bits, &end, 10);
    if (end == bits || *end != '\0' || value < 32 || value > 65536) {
      err << "usage error: EMAX_PRECISION_BITS must be an integer in [32, 65536]\n";
      return kExitUsage;
    }
    config.precision_bits = static_cast<unsigned>(value);
  }
  return dispatch(config, out, err);
}

}  // namespace emax
