#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "momentsos/pipeline.hpp"

using namespace momentsos;

int main(int argc, char** argv) {
  CLI::App app{
      "Moment-relaxation toolkit: assemble robust polynomial-optimization "
      "relaxations, solve them, extract minimizers, and verify the bounds.\n"
      "Reports are line-delimited JSON records, one per pipeline stage."};
  app.require_subcommand(1);

  RunManifest m;
  std::string eps_str, eta_str, gamma_str;
  bool no_extract = false;

  const std::vector<std::string> formulations = {
      "nominal-primal", "nominal-dual",  "noise-dual",
      "priority-trace", "priority-psd",  "canonical-robust"};

  auto add_common = [&](CLI::App* sub, bool with_problem) {
    if (with_problem) {
      sub->add_option("problem", m.problem,
                      "builtin (motzkin, motzkin-perturbed, univariate) or "
                      "problem-file path")
          ->capture_default_str();
    }
    sub->add_option("--order", m.order, "relaxation order j (default: the problem's)")
        ->envname("MOMENTSOS_ORDER");
    sub->add_option("--eps", eps_str,
                    "coefficient noise level, exact rational (\"1e-8\", \"1/3\")")
        ->envname("MOMENTSOS_EPS");
    sub->add_option("--eta", eta_str, "cone shift level, exact rational")
        ->envname("MOMENTSOS_ETA");
    sub->add_option("--gamma", gamma_str, "builtin family parameter, exact rational")
        ->envname("MOMENTSOS_GAMMA");
    sub->add_option("--formulation", m.formulation, "which relaxation to build")
        ->check(CLI::IsMember(formulations))
        ->capture_default_str()
        ->envname("MOMENTSOS_FORMULATION");
    sub->add_option("--epsilon-star", m.solver.epsilon_star,
                    "solver feasibility/gap tolerance")
        ->capture_default_str()
        ->envname("MOMENTSOS_EPSILON_STAR");
    sub->add_option("--lambda-star", m.solver.lambda_star,
                    "scale of the identity starting point")
        ->capture_default_str()
        ->envname("MOMENTSOS_LAMBDA_STAR");
    sub->add_option("--beta-bar", m.solver.beta_bar,
                    "centering weight while infeasible")
        ->capture_default_str()
        ->envname("MOMENTSOS_BETA_BAR");
    sub->add_option("--max-iter", m.solver.max_iter, "iteration cap")
        ->capture_default_str()
        ->envname("MOMENTSOS_MAX_ITER");
    sub->add_option("--step-fraction", m.solver.step_fraction,
                    "fraction of the step to the cone boundary")
        ->capture_default_str()
        ->envname("MOMENTSOS_STEP_FRACTION");
    sub->add_option("--seed", m.extraction.seed,
                    "seed mixing the extraction operators")
        ->capture_default_str()
        ->envname("MOMENTSOS_SEED");
    sub->add_flag("--no-extract", no_extract, "skip minimizer extraction")
        ->envname("MOMENTSOS_NO_EXTRACT");
    sub->add_flag("--game", m.with_game,
                  "adversarial max-min verification (extra solves)")
        ->envname("MOMENTSOS_GAME");
    sub->add_flag("--trace", m.solver.trace, "per-iteration line on stderr")
        ->envname("MOMENTSOS_TRACE");
    sub->add_option("--out", m.out,
                    "relax: exchange-file path; solve/reproduce: report path "
                    "(default stdout)")
        ->envname("MOMENTSOS_OUT");
  };

  CLI::App* relax = app.add_subcommand(
      "relax", "assemble the selected relaxation and write its exchange file");
  add_common(relax, true);

  CLI::App* solve = app.add_subcommand(
      "solve", "assemble, solve, extract, and certify in one pipeline");
  add_common(solve, true);

  std::string experiment;
  CLI::App* repro =
      app.add_subcommand("reproduce", "run a canned experiment bundle");
  repro->add_option("name", experiment, "motzkin or univariate")
      ->required()
      ->check(CLI::IsMember({"motzkin", "univariate"}));
  add_common(repro, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!eps_str.empty()) m.eps = parse_rational(eps_str);
    if (!eta_str.empty()) m.eta = parse_rational(eta_str);
    if (!gamma_str.empty()) m.gamma = parse_rational(gamma_str);
    m.with_extraction = !no_extract;

    if (relax->parsed()) {
      std::string path = cmd_relax(m, std::cout);
      std::cerr << "wrote " << path << "\n";
      return 0;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!m.out.empty()) {
      file.open(m.out);
      if (!file) throw std::runtime_error("cannot open report file: " + m.out);
      os = &file;
    }
    if (solve->parsed()) {
      cmd_solve(m, *os);
    } else {
      cmd_reproduce(experiment, m, *os);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
