#pragma once

#include <Eigen/Dense>
#include <vector>

#include "momentsos/moment_problem.hpp"
#include "momentsos/sdp_instance.hpp"
#include "momentsos/solver.hpp"

namespace momentsos {

/// Coefficientwise adversarial perturbation against a pseudo-moment vector:
/// every coefficient of the degree-2j basis moves by eps in the direction that
/// increases the linear functional, so L_y(tilde) = L_y(base) + eps * |y|_1.
struct WorstCasePolynomial {
  Polynomial base;
  Rat eps;
  std::vector<int> signs;  // sign(y_a) per basis monomial, 0 kept at 0
  Polynomial tilde;
};

WorstCasePolynomial worst_case_polynomial(const Polynomial& f, const MomentSequence& y,
                                          const Rat& eps);

/// f(x) + eta * sum_l g_l(x) * sum_b x^{2b}, the polynomial whose plain
/// minimization matches the trace-penalized relaxation. Exact in rationals.
Rat robust_objective_eta(const MomentProblem& mp, const std::vector<Rat>& x);
double robust_objective_eta(const MomentProblem& mp, const Eigen::VectorXd& x);

/// f(x) + eps * sum_{|a| <= 2j} |x^a|; not a polynomial, but exactly evaluable.
Rat robust_objective_eps(const MomentProblem& mp, const std::vector<Rat>& x);
double robust_objective_eps(const MomentProblem& mp, const Eigen::VectorXd& x);

/// Two-player game consistency report: the penalized (min) side and the
/// box-perturbation (max) side of one formulation must meet at the same value,
/// and on canonical instances a corner-sampled lower bound must stay below.
struct GameReport {
  FormulationKind kind = FormulationKind::NOMINAL_PRIMAL;
  SolveStatus status = SolveStatus::NUMERICAL_FAILURE;
  double value_penalized = 0;
  double value_maxmin = 0;
  double discrepancy = 0;
  bool pass_equality = false;
  double corner_bound = 0;
  bool corner_checked = false;
  bool pass_corner = true;
};

/// kind in {PRIORITY_TRACE, PRIORITY_PSD, CANONICAL_ROBUST}. The canonical
/// variant builds the nominal instance for mp, applies the l1 penalty at
/// mp.noise.eps, and cross-checks against corner objectives c +- eps
/// (all 2^m corners when m <= corner_budget_log2, else a seeded sample).
GameReport verify_minimax(const MomentProblem& mp, FormulationKind kind,
                          const SolverConfig& scfg = {}, int corner_budget_log2 = 6,
                          unsigned corner_seed = 1);

}  // namespace momentsos
