// Command-line frontend: grid/figure CSV emission, the property-check
// suites, and proximal-point minimization. All CSV output is byte-identical
// across reruns for a fixed configuration and seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moreau/check_suites.hpp"
#include "moreau/csv.hpp"
#include "moreau/envelope.hpp"
#include "moreau/zoo.hpp"

namespace {

std::string default_out_dir() {
  const char* d = std::getenv("MOREAU_OUT_DIR");
  return d && *d ? std::string(d) : std::string(".");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

moreau::ZooEntry resolve_function(const std::string& name, const std::vector<double>& params) {
  return moreau::make_function(name, params);
}

struct GridArgs {
  std::string function = "paper_h";
  std::vector<double> params;
  std::vector<double> gammas;
  std::vector<double> range{-2.0, 2.0};
  int samples = 201;
  std::string output;
};

int run_grid(const GridArgs& a) {
  if (a.samples < 2) throw std::invalid_argument("samples must be at least 2");
  if (a.range.size() != 2 || !(a.range[0] < a.range[1]))
    throw std::invalid_argument("range must be lo,hi with lo < hi");
  if (a.gammas.empty()) throw std::invalid_argument("at least one gamma is required");
  moreau::ZooEntry e = resolve_function(a.function, a.params);
  if (e.spec.dim != 1) throw std::invalid_argument("grid requires a 1-D function");
  for (double g : a.gammas) moreau::check_admissible(e.spec.rho, g);

  std::string dir = a.output.empty() ? default_out_dir() : a.output;
  for (double g : a.gammas) {
    std::string path = dir + "/grid_" + e.spec.name + "_" + moreau::csv::format(g) + ".csv";
    std::ofstream file = open_output(path);
    moreau::csv::Writer w(file);
    w.header({"x", "f", "env", "prox", "grad_env", "dgamma"});
    for (int i = 0; i < a.samples; ++i) {
      double x = a.range[0] + (a.range[1] - a.range[0]) * i / (a.samples - 1);
      moreau::Point p = moreau::Point::scalar(x);
      moreau::ExtendedReal fx = moreau::evaluate(e.spec, p);
      moreau::EnvelopeReport rep = moreau::envelope_report(e.spec, g, p);
      double px = x - g * rep.gradient.scalar_value();
      w.row(std::vector<moreau::ExtendedReal>{
          moreau::ExtendedReal(x), fx, moreau::ExtendedReal(rep.value),
          moreau::ExtendedReal(px), moreau::ExtendedReal(rep.gradient.scalar_value()),
          moreau::ExtendedReal(rep.dgamma)});
    }
    std::cerr << "wrote " << path << "\n";
  }
  return 0;
}

struct FigureArgs {
  std::string function = "paper_h";
  std::vector<double> params;
  std::vector<double> gammas{0.01, 0.25, 0.49};
  std::vector<double> range{-1.6, 1.6};
  int samples = 321;
  std::string output;
};

int run_figure(const FigureArgs& a) {
  if (a.samples < 2) throw std::invalid_argument("samples must be at least 2");
  if (a.range.size() != 2 || !(a.range[0] < a.range[1]))
    throw std::invalid_argument("range must be lo,hi with lo < hi");
  if (a.gammas.empty()) throw std::invalid_argument("at least one gamma is required");
  moreau::ZooEntry e = resolve_function(a.function, a.params);
  if (e.spec.dim != 1) throw std::invalid_argument("figure requires a 1-D function");
  for (double g : a.gammas) moreau::check_admissible(e.spec.rho, g);

  std::string path = a.output.empty() ? default_out_dir() + "/figure.csv" : a.output;
  std::ofstream file = open_output(path);
  moreau::csv::Writer w(file);
  std::vector<std::string> header{"x", "h"};
  for (double g : a.gammas) header.push_back("env_" + moreau::csv::format(g));
  w.header(header);
  for (int i = 0; i < a.samples; ++i) {
    double x = a.range[0] + (a.range[1] - a.range[0]) * i / (a.samples - 1);
    moreau::Point p = moreau::Point::scalar(x);
    std::vector<moreau::ExtendedReal> cells{moreau::ExtendedReal(x),
                                            moreau::evaluate(e.spec, p)};
    for (double g : a.gammas)
      cells.push_back(moreau::ExtendedReal(moreau::env_value(e.spec, g, p)));
    w.row(cells);
  }
  std::cerr << "wrote " << path << "\n";
  return 0;
}

struct CheckArgs {
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  std::string output;
};

int run_check(const CheckArgs& a) {
  moreau::CheckConfig cfg;
  cfg.seed = a.seed;
  cfg.base_tol = a.tolerance;
  moreau::PropertyReport report = moreau::run_all_checks(cfg);

  std::string path = a.output.empty() ? default_out_dir() + "/report.csv" : a.output;
  std::ofstream file = open_output(path);
  moreau::csv::write_property_report(file, report);

  long failed = 0;
  for (const auto& r : report.rows) {
    if (!r.pass) {
      ++failed;
      std::cerr << "FAIL " << r.suite << "/" << r.check << " worst=" << r.worst
                << " tol=" << r.tolerance << "\n";
    }
  }
  std::cerr << report.rows.size() << " checks, " << failed << " failed, report at " << path
            << "\n";
  return failed == 0 ? 0 : 1;
}

struct MinimizeArgs {
  std::string function = "paper_h";
  std::vector<double> params;
  double gamma = 0.25;
  std::vector<double> x0{0.6};
  double tol = 1e-8;
  int max_iter = 1000;
};

int run_minimize(const MinimizeArgs& a) {
  moreau::ZooEntry e = resolve_function(a.function, a.params);
  moreau::check_admissible(e.spec.rho, a.gamma);
  if (a.x0.size() != e.spec.dim)
    throw std::invalid_argument("x0 has wrong dimension for " + e.spec.name);
  moreau::Point x0(a.x0.size());
  for (std::size_t i = 0; i < a.x0.size(); ++i) x0[i] = a.x0[i];

  moreau::MinimizeResult r =
      moreau::proximal_point_minimize(e.spec, a.gamma, x0, a.tol, a.max_iter, {}, true);

  moreau::csv::Writer w(std::cout);
  std::vector<std::string> header{"iter"};
  for (std::size_t i = 0; i < e.spec.dim; ++i) header.push_back("x" + std::to_string(i));
  w.header(header);
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    std::vector<std::string> cells{std::to_string(k)};
    for (double c : r.trace[k]) cells.push_back(moreau::csv::format(c));
    w.row(cells);
  }
  std::vector<std::string> last{"final"};
  for (double c : r.point) last.push_back(moreau::csv::format(c));
  w.row(last);

  std::cerr << (r.converged ? "converged" : "did not converge") << " after " << r.iterations
            << " iterations\n";
  return r.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moreau envelopes, proximal operators, and convex conjugates"};
  app.require_subcommand(1);

  GridArgs grid;
  CLI::App* grid_cmd = app.add_subcommand("grid", "evaluate f/env/prox/grad/dgamma on a grid");
  grid_cmd->add_option("--function", grid.function, "function name");
  grid_cmd->add_option("--params", grid.params, "function parameters")->delimiter(',');
  grid_cmd->add_option("--gamma,--gammas", grid.gammas, "gamma values")
      ->delimiter(',')
      ->required();
  grid_cmd->add_option("--range", grid.range, "lo,hi")->delimiter(',')->expected(2);
  grid_cmd->add_option("--samples", grid.samples, "grid size");
  grid_cmd->add_option("--output", grid.output, "output directory");

  FigureArgs fig;
  CLI::App* fig_cmd = app.add_subcommand("figure", "envelope columns for plotting");
  fig_cmd->add_option("--function", fig.function, "function name");
  fig_cmd->add_option("--params", fig.params, "function parameters")->delimiter(',');
  fig_cmd->add_option("--gamma,--gammas", fig.gammas, "gamma values")->delimiter(',');
  fig_cmd->add_option("--range", fig.range, "lo,hi")->delimiter(',')->expected(2);
  fig_cmd->add_option("--samples", fig.samples, "grid size");
  fig_cmd->add_option("--output", fig.output, "output file");

  CheckArgs chk;
  CLI::App* chk_cmd = app.add_subcommand("check", "run every property suite");
  chk_cmd->add_option("--seed", chk.seed, "sampling seed");
  chk_cmd->add_option("--tolerance", chk.tolerance, "tolerance for unpinned identity checks");
  chk_cmd->add_option("--output", chk.output, "report file");

  MinimizeArgs min;
  CLI::App* min_cmd = app.add_subcommand("minimize", "proximal-point iteration");
  min_cmd->add_option("--function", min.function, "function name");
  min_cmd->add_option("--params", min.params, "function parameters")->delimiter(',');
  min_cmd->add_option("--gamma", min.gamma, "smoothing parameter");
  min_cmd->add_option("--x0", min.x0, "start point")->delimiter(',');
  min_cmd->add_option("--tol", min.tol, "step-length stop tolerance");
  min_cmd->add_option("--max-iter", min.max_iter, "iteration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*grid_cmd) return run_grid(grid);
    if (*fig_cmd) return run_figure(fig);
    if (*chk_cmd) return run_check(chk);
    if (*min_cmd) return run_minimize(min);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
