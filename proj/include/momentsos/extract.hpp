#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "momentsos/moment_problem.hpp"
#include "momentsos/sdp_instance.hpp"

namespace momentsos {

struct ExtractionConfig {
  double rank_tol = 1e-3;    // relative singular-value cutoff for numerical rank
  double pivot_tol = 1e-6;   // column-echelon pivot threshold
  double feas_tol = 1e-4;    // certification tolerance
  unsigned seed = 20240801;  // mixes the multiplication operators
};

enum class ExtractStatus {
  FLAT,             // rank stabilized across the last localizing step
  NOT_FLAT,         // points returned but not trusted
  ILL_CONDITIONED,  // pivoting or operator construction failed
};

std::string extract_status_name(ExtractStatus s);

/// Atomic-support candidate read off a pseudo-moment vector.
struct ExtractionResult {
  ExtractStatus status = ExtractStatus::ILL_CONDITIONED;
  std::vector<int> ranks;  // numerical rank of the order-k moment matrix, k = 0..j
  bool flat = false;
  std::vector<Eigen::VectorXd> points;
  std::vector<double> weights;   // least-squares atomic weights
  std::vector<double> f_values;  // objective at each point
  std::vector<double> g_mins;    // most violated constraint at each point (+inf if none)
  double recon_error = 0;        // ||M_j(y) - sum_k w_k v(x_k) v(x_k)^T||_F
};

/// Support extraction from a degree-2j pseudo-moment vector: factor the moment
/// matrix at its numerical rank, reduce the factor to column echelon form to
/// pick a monomial basis, build per-variable multiplication operators, and
/// read point coordinates from the ordered orthogonal-triangular decomposition
/// of a random convex combination. Deterministic for a fixed cfg.seed.
ExtractionResult extract_minimizers(const Eigen::VectorXd& y, const MomentProblem& mp,
                                    const ExtractionConfig& cfg = {});
ExtractionResult extract_minimizers(const MomentSequence& y, const MomentProblem& mp,
                                    const ExtractionConfig& cfg = {});

struct CertifyReport {
  double f_value = 0;
  std::vector<double> g_values;
  double gap = 0;  // f(x) - bound; nonnegative when the bound is valid at x
  bool pass = false;
};

/// Checks a candidate point against the original data: membership in the
/// feasible set up to feas_tol and validity of the reported lower bound.
CertifyReport certify_point(const Eigen::VectorXd& x, const MomentProblem& mp, double bound,
                            const ExtractionConfig& cfg = {});

struct RankOneReport {
  bool rank_one = false;  // when false the check is skipped
  Eigen::VectorXd point;
  double robust_value = 0;  // perturbed objective evaluated at the point
  double solve_value = 0;
  double discrepancy = 0;
  bool pass = false;
};

/// When the moment matrix is numerically rank one, the penalized relaxation
/// value must coincide with the perturbed objective at the single support
/// point. kind selects the perturbation: PRIORITY_TRACE evaluates the
/// even-square form, PRIORITY_PSD the absolute-monomial form.
RankOneReport rank_one_equivalence_check(const Eigen::VectorXd& y, const MomentProblem& mp,
                                         FormulationKind kind, double solve_value, double tol,
                                         const ExtractionConfig& cfg = {});

}  // namespace momentsos
