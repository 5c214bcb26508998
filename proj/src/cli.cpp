#include "gammapair/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammapair/density.hpp"
#include "gammapair/errors.hpp"
#include "gammapair/model.hpp"
#include "gammapair/plan_io.hpp"
#include "gammapair/planner.hpp"
#include "gammapair/rng.hpp"
#include "gammapair/samplers.hpp"
#include "gammapair/stats.hpp"

namespace gammapair {
namespace {

using ordered_json = nlohmann::ordered_json;

// Every numeric CSV cell is printed with 17 significant digits so values
// round-trip bit-exactly.
std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct PlanningArgs {
  int method = 0;
  double m = 0.0;
  double n = 0.0;
  double rho = 0.0;
  double rate = 1.0;
  std::string mode = "exact";
  std::string plan_file;
  CLI::Option* method_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* rho_opt = nullptr;
  CLI::Option* file_opt = nullptr;
};

void add_planning_options(CLI::App* cmd, PlanningArgs& a,
                          bool allow_plan_file) {
  a.method_opt =
      cmd->add_option("--method", a.method,
                      "Construction method: 1 couples antithetic uniforms, "
                      "2 couples bivariate uniform pairs")
          ->check(CLI::IsMember({1, 2}));
  a.m_opt = cmd->add_option("--m", a.m, "Shape of the first marginal");
  a.n_opt = cmd->add_option("--n", a.n, "Shape of the second marginal");
  a.rho_opt =
      cmd->add_option("--rho", a.rho, "Target correlation, in (-1, 0)");
  cmd->add_option("--mode", a.mode,
                  "Method-1 target matching: exact requires an integer "
                  "solution, nearest takes the closest attainable value")
      ->check(CLI::IsMember({"exact", "nearest"}))
      ->capture_default_str();
  cmd->add_option("--rate", a.rate, "Common rate of both marginals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (allow_plan_file) {
    a.file_opt = cmd->add_option(
        "--plan-file", a.plan_file,
        "Read the plan from this JSON file ('-' for stdin) instead of "
        "solving; other planning flags are then optional");
  }
}

PlanDocument resolve_plan(const PlanningArgs& a) {
  if (a.file_opt != nullptr && a.file_opt->count() > 0) {
    std::string text;
    if (a.plan_file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(a.plan_file);
      if (!in) {
        throw std::invalid_argument("cannot open plan file: " + a.plan_file);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    PlanDocument doc = parse_plan(text);
    if (a.method_opt->count() > 0 && a.method != doc.method) {
      throw std::invalid_argument("--method disagrees with the plan file");
    }
    return doc;
  }
  if (a.method_opt->count() == 0) {
    throw std::invalid_argument("--method is required without --plan-file");
  }
  if (a.m_opt->count() == 0 || a.n_opt->count() == 0 ||
      a.rho_opt->count() == 0) {
    throw std::invalid_argument(
        "--m, --n, and --rho are required without --plan-file");
  }
  const NormalizedTarget norm = normalize_target(a.m, a.n, a.rho);
  if (a.method == 1) {
    const SolveMode mode =
        a.mode == "exact" ? SolveMode::exact : SolveMode::nearest;
    const Method1Plan p = solve_method1(norm.spec, mode);
    return make_plan_document(make_method1_plan(p.r, p.s, p.alpha0, a.rate),
                              a.rho, norm.swapped);
  }
  const Method2Plan p = solve_method2(norm.spec);
  return make_plan_document(
      make_method2_plan(p.r, p.s, p.alpha0, p.theta, a.rate), a.rho,
      norm.swapped);
}

int run_plan(const PlanningArgs& a, std::ostream& out) {
  out << format_plan(resolve_plan(a));
  return 0;
}

int run_bounds(int method, double m, double n, std::ostream& out) {
  const FeasibilityReport report =
      feasibility(method == 1 ? Method::m1 : Method::m2, m, n);
  ordered_json j;
  j["method"] = method;
  j["m"] = report.m;
  j["n"] = report.n;
  j["rho_min"] = report.rho_min;
  j["rho_max"] = report.rho_max;
  j["notes"] = report.notes;
  out << j.dump(2) << "\n";
  return 0;
}

int run_table(std::ostream& out) {
  out << "r,m,n,rho\n";
  char line[64];
  for (const TableRow& row : reference_table()) {
    std::snprintf(line, sizeof line, "%d,%d,%d,%.4f\n", row.r, row.m, row.n,
                  row.rho);
    out << line;
  }
  return 0;
}

int run_sample(const PlanningArgs& a, long long count, std::uint64_t seed,
               std::uint64_t stream_id, const std::string& format,
               std::ostream& out) {
  const PlanDocument doc = resolve_plan(a);
  Method1Plan p1;
  Method2Plan p2;
  if (doc.method == 1) {
    p1 = to_method1_plan(doc);
  } else {
    p2 = to_method2_plan(doc);
  }
  RngStream stream = substream(seed, stream_id);
  const bool csv = format == "csv";
  if (csv) out << "y1,y2\n";
  char line[96];
  for (long long i = 0; i < count; ++i) {
    SamplePair p = doc.method == 1 ? sample_method1(p1, stream)
                                   : sample_method2(p2, stream);
    // Columns keep the caller's original (m, n) orientation.
    if (doc.swapped) std::swap(p.y1, p.y2);
    if (csv) {
      std::snprintf(line, sizeof line, "%.17g,%.17g\n", p.y1, p.y2);
      out << line;
    } else {
      ordered_json j;
      j["y1"] = p.y1;
      j["y2"] = p.y2;
      out << j.dump() << "\n";
    }
  }
  return 0;
}

int run_verify(const PlanningArgs& a, long long count, std::uint64_t seed,
               std::uint64_t stream_id, std::ostream& out) {
  const PlanDocument doc = resolve_plan(a);
  Method1Plan p1;
  Method2Plan p2;
  if (doc.method == 1) {
    p1 = to_method1_plan(doc);
  } else {
    p2 = to_method2_plan(doc);
  }

  RngStream stream = substream(seed, stream_id);
  SummaryStats stats;
  std::vector<double> col1;
  std::vector<double> col2;
  col1.reserve(static_cast<std::size_t>(count));
  col2.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    SamplePair p = doc.method == 1 ? sample_method1(p1, stream)
                                   : sample_method2(p2, stream);
    if (doc.swapped) std::swap(p.y1, p.y2);
    stats.add(p.y1, p.y2);
    col1.push_back(p.y1);
    col2.push_back(p.y2);
  }
  std::sort(col1.begin(), col1.end());
  std::sort(col2.begin(), col2.end());

  double shape1 = doc.alpha0 + doc.r;
  double shape2 = doc.alpha0 + doc.s;
  if (doc.swapped) std::swap(shape1, shape2);
  const double rate = doc.rate;
  const GammaParams marg1{rate, shape1};
  const GammaParams marg2{rate, shape2};
  const KsResult ks1 = ks_statistic(
      col1, [&](double x) { return gamma_cdf(x, marg1); });
  const KsResult ks2 = ks_statistic(
      col2, [&](double x) { return gamma_cdf(x, marg2); });

  const double dn = static_cast<double>(count);
  const double mean1_t = shape1 / rate;
  const double mean2_t = shape2 / rate;
  const double var1_t = shape1 / (rate * rate);
  const double var2_t = shape2 / (rate * rate);
  const double corr_t = doc.rho_theoretical;

  // Gates: 4 standard errors on means and variances (the variance of a
  // sample variance uses the gamma fourth moment), 6 delta-method standard
  // errors on the correlation, and the asymptotic 1% critical value on
  // both KS statistics.
  const double mean1_tol = 4.0 * std::sqrt(var1_t / dn);
  const double mean2_tol = 4.0 * std::sqrt(var2_t / dn);
  const double r4 = rate * rate * rate * rate;
  const double var1_tol =
      4.0 * std::sqrt((2.0 * shape1 * shape1 + 6.0 * shape1) / (r4 * dn));
  const double var2_tol =
      4.0 * std::sqrt((2.0 * shape2 * shape2 + 6.0 * shape2) / (r4 * dn));
  const double corr_tol = 6.0 * (1.0 - corr_t * corr_t) / std::sqrt(dn);

  const double corr_e = stats.corr();
  bool pass = true;
  pass = pass && std::fabs(stats.mean1() - mean1_t) <= mean1_tol;
  pass = pass && std::fabs(stats.mean2() - mean2_t) <= mean2_tol;
  pass = pass && std::fabs(stats.var1() - var1_t) <= var1_tol;
  pass = pass && std::fabs(stats.var2() - var2_t) <= var2_tol;
  pass = pass && stats.corr_defined() &&
         std::fabs(corr_e - corr_t) <= corr_tol;
  pass = pass && ks1.statistic < ks1.critical_1pct;
  pass = pass && ks2.statistic < ks2.critical_1pct;

  ordered_json report;
  report["plan"] = ordered_json::parse(format_plan(doc));
  report["empirical"] = ordered_json{{"count", count},
                                     {"mean1", stats.mean1()},
                                     {"mean2", stats.mean2()},
                                     {"var1", stats.var1()},
                                     {"var2", stats.var2()},
                                     {"corr", corr_e}};
  report["theoretical"] = ordered_json{{"mean1", mean1_t},
                                       {"mean2", mean2_t},
                                       {"var1", var1_t},
                                       {"var2", var2_t},
                                       {"corr", corr_t}};
  report["ks"] = ordered_json{{"d1", ks1.statistic},
                              {"d2", ks2.statistic},
                              {"critical_1pct", ks1.critical_1pct}};
  report["pass"] = pass;
  out << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

int run_density(double alpha0, double y1_max, double y2_max, double step,
                std::ostream& out) {
  out << "y1,y2,f\n";
  for (int i = 0;; ++i) {
    const double y1 = step * i;
    if (y1 > y1_max + 1e-12) break;
    for (int j = 0;; ++j) {
      const double y2 = step * j;
      if (y2 > y2_max + 1e-12) break;
      const double f = joint_density_r1s1(y1, y2, alpha0);
      out << fmt17(y1) << ',' << fmt17(y2) << ',' << fmt17(f) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Plans, samples, and statistically verifies pairs of negatively "
      "correlated gamma variates"};
  app.name("gammapair");
  app.require_subcommand(1);

  PlanningArgs plan_args;
  auto* plan_cmd = app.add_subcommand(
      "plan", "Solve for a sampling plan and print it as JSON");
  add_planning_options(plan_cmd, plan_args, false);
  plan_args.method_opt->required();
  plan_args.m_opt->required();
  plan_args.n_opt->required();
  plan_args.rho_opt->required();

  int bounds_method = 0;
  double bounds_m = 0.0;
  double bounds_n = 0.0;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Report the attainable correlation range for given shapes");
  bounds_cmd->add_option("--method", bounds_method, "Construction method")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  bounds_cmd->add_option("--m", bounds_m, "Shape of the first marginal")
      ->required();
  bounds_cmd->add_option("--n", bounds_n, "Shape of the second marginal")
      ->required();

  auto* table_cmd = app.add_subcommand(
      "table",
      "Print the bundled catalogue of method-1 correlations as CSV");

  PlanningArgs sample_args;
  long long sample_count = 0;
  std::uint64_t sample_seed = 0;
  std::uint64_t sample_stream = 0;
  std::string sample_format = "csv";
  auto* sample_cmd =
      app.add_subcommand("sample", "Generate pairs and print them");
  add_planning_options(sample_cmd, sample_args, true);
  sample_cmd->add_option("--count", sample_count, "Number of pairs")
      ->required()
      ->check(CLI::Range(0LL, 1000000000LL));
  sample_cmd->add_option("--seed", sample_seed, "Stream seed")
      ->capture_default_str();
  sample_cmd->add_option("--stream", sample_stream, "Substream id")
      ->capture_default_str();
  sample_cmd->add_option("--format", sample_format, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  PlanningArgs verify_args;
  long long verify_count = 0;
  std::uint64_t verify_seed = 0;
  std::uint64_t verify_stream = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Sample pairs and gate moments, correlation, and marginal KS fits "
      "against the plan");
  add_planning_options(verify_cmd, verify_args, true);
  verify_cmd->add_option("--count", verify_count, "Number of pairs")
      ->required()
      ->check(CLI::Range(2LL, 1000000000LL));
  verify_cmd->add_option("--seed", verify_seed, "Stream seed")
      ->capture_default_str();
  verify_cmd->add_option("--stream", verify_stream, "Substream id")
      ->capture_default_str();

  double density_alpha0 = 0.0;
  double density_y1_max = 0.0;
  double density_y2_max = 0.0;
  double density_step = 0.0;
  auto* density_cmd = app.add_subcommand(
      "density",
      "Tabulate the joint density of the one-coupled-term construction on "
      "a grid");
  density_cmd
      ->add_option("--alpha0", density_alpha0, "Shape of the shared shock")
      ->required()
      ->check(CLI::PositiveNumber);
  density_cmd->add_option("--y1-max", density_y1_max, "Grid extent for y1")
      ->required()
      ->check(CLI::PositiveNumber);
  density_cmd->add_option("--y2-max", density_y2_max, "Grid extent for y2")
      ->required()
      ->check(CLI::PositiveNumber);
  density_cmd->add_option("--step", density_step, "Grid spacing")
      ->required()
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gammapair");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (plan_cmd->parsed()) return run_plan(plan_args, out);
    if (bounds_cmd->parsed()) {
      return run_bounds(bounds_method, bounds_m, bounds_n, out);
    }
    if (table_cmd->parsed()) return run_table(out);
    if (sample_cmd->parsed()) {
      return run_sample(sample_args, sample_count, sample_seed,
                        sample_stream, sample_format, out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_args, verify_count, verify_seed,
                        verify_stream, out);
    }
    if (density_cmd->parsed()) {
      return run_density(density_alpha0, density_y1_max, density_y2_max,
                         density_step, out);
    }
  } catch (const infeasible_error& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const not_representable_error& e) {
    err << "not representable: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gammapair
