// fuzzyqp: command-line front end for the fuzzy QP solver.
//
//   fuzzyqp solve     --input P.json [--alphas 0:1:0.2] [--format table|csv|plot-data]
//   fuzzyqp plot-data --input P.json [--alphas ...] [--format csv|table]
//   fuzzyqp validate  --input P.json [--symmetrize]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fuzzyqp/fuzzyqp.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitNotConverged = 3;

struct RunConfig {
  std::string input;
  std::string alphas;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string output;
  bool symmetrize = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool solving) {
  cmd->add_option("--input", cfg.input, "problem file (JSON)")->required();
  cmd->add_flag("--symmetrize", cfg.symmetrize, "replace Q by (Q + Q')/2 before validating");
  if (!solving) return;
  cmd->add_option("--alphas", cfg.alphas, "alpha grid: start:stop:step, a,b,c, or one value");
  cmd->add_option("--tol", cfg.tol, "iterate-change tolerance");
  cmd->add_option("--max-iter", cfg.max_iter, "iteration limit per start point");
  cmd->add_option("--seed", cfg.seed, "seed for multistart points");
  cmd->add_option("--output", cfg.output, "write here instead of standard output");
}

fuzzyqp::FuzzyQP load(const RunConfig& cfg) {
  auto p = fuzzyqp::parse_problem_structure(fuzzyqp::read_text_file(cfg.input));
  if (cfg.symmetrize) p = fuzzyqp::symmetrized(std::move(p));
  fuzzyqp::require_valid(p);
  return p;
}

fuzzyqp::SolverOptions options(const RunConfig& cfg) {
  fuzzyqp::SolverOptions opts;
  if (cfg.tol) opts.tol = *cfg.tol;
  if (cfg.max_iter) opts.max_iter = *cfg.max_iter;
  if (cfg.seed) opts.seed = *cfg.seed;
  return opts;
}

std::vector<double> grid(const RunConfig& cfg) {
  return cfg.alphas.empty() ? fuzzyqp::default_grid() : fuzzyqp::parse_alpha_spec(cfg.alphas);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw fuzzyqp::Error(cfg.output + ": cannot open for writing");
  out << text;
}

int run_solve(const RunConfig& cfg, bool plot) {
  const auto problem = load(cfg);
  const auto curve = fuzzyqp::solve_fqp(problem, grid(cfg), options(cfg));
  std::ostringstream text;
  const std::string& fmt = cfg.format;
  if (plot || fmt == "plot-data") {
    const auto line = fuzzyqp::membership_polyline(curve);
    if (fmt == "table") {
      fuzzyqp::write_polyline_table(text, line);
    } else {
      fuzzyqp::write_polyline_csv(text, line);
    }
  } else if (fmt == "csv") {
    fuzzyqp::write_csv(text, curve);
  } else {
    fuzzyqp::write_table(text, curve);
  }
  emit(cfg, text.str());
  if (!curve.all_converged()) {
    std::cerr << "fuzzyqp: warning: at least one endpoint solve did not converge\n";
    return kExitNotConverged;
  }
  return 0;
}

int run_validate(const RunConfig& cfg) {
  auto p = fuzzyqp::parse_problem_structure(fuzzyqp::read_text_file(cfg.input));
  if (cfg.symmetrize) p = fuzzyqp::symmetrized(std::move(p));
  const auto violations = fuzzyqp::validate(p);
  if (violations.empty()) {
    std::cout << cfg.input << ": ok (n=" << p.n << ", m=" << p.m << ")\n";
    return 0;
  }
  for (const auto& v : violations) std::cout << v.entry << ": " << v.message << '\n';
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy quadratic programming by alpha-cut decomposition"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* solve = app.add_subcommand("solve", "solve the lower/upper QPs on an alpha grid");
  add_common(solve, cfg, true);
  solve->add_option("--format", cfg.format, "table, csv or plot-data")
      ->check(CLI::IsMember({"table", "csv", "plot-data"}))
      ->default_str("table");

  auto* plot = app.add_subcommand("plot-data", "emit the membership polyline of the optimal objective");
  add_common(plot, cfg, true);
  plot->add_option("--format", cfg.format, "csv, plot-data or table")
      ->check(CLI::IsMember({"table", "csv", "plot-data"}))
      ->default_str("csv");

  auto* check = app.add_subcommand("validate", "check a problem file");
  add_common(check, cfg, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(cfg, false);
    if (*plot) return run_solve(cfg, true);
    return run_validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "fuzzyqp: error: " << e.what() << '\n';
    return kExitError;
  }
}
