#pragma once

#include <string>
#include <vector>

#include "momentsos/schur.hpp"

namespace momentsos {

struct SolverConfig {
  double epsilon_star = 1e-7;   // target for feasibility and gap measures
  double lambda_star = 1e2;     // scale of the identity starting point
  double beta_bar = 0.2;        // centering weight while infeasible
  int max_iter = 200;
  double step_fraction = 0.9;   // fraction of the distance to the boundary
  double divergence_threshold = 1e6;
  bool parallel_schur = true;
  bool trace = false;           // per-iteration line on stderr
};

enum class SolveStatus {
  OPTIMAL,
  PRIMAL_INFEASIBLE_SUSPECTED,  // max side diverges above the threshold
  DUAL_INFEASIBLE_SUSPECTED,    // min side diverges below the threshold
  MAX_ITER,
  NUMERICAL_FAILURE,
};

std::string status_name(SolveStatus s);

struct IterationLog {
  int iter = 0;
  double err_p = 0;
  double err_d = 0;
  double mu = 0;
  double step_p = 0;
  double step_d = 0;
  double pobj = 0;
  double dobj = 0;
};

struct SolverResult {
  SolveStatus status = SolveStatus::NUMERICAL_FAILURE;
  Eigen::VectorXd x;        // min-side scalars
  BlockMatrix X;            // min-side slack matrix
  BlockMatrix Y;            // max-side matrix
  double primal_objective = 0;  // c . x, no offset
  double dual_objective = 0;    // <F_0, Y>, no offset
  double named_value = 0;       // offset + the value of the tagged side
  double err_p = 0;
  double err_d = 0;
  double gap_rel = 0;
  int iterations = 0;
  std::vector<IterationLog> history;
};

/// Infeasible-start interior-point iteration on the primal-dual pair encoded
/// by the instance. Deterministic: identical inputs give identical iterates
/// under any thread count.
SolverResult solve_sdp(const SdpInstance& sdp, const SolverConfig& cfg = {});

/// The pseudo-moment vector over the degree-2j basis implied by the min-side
/// scalars (leading 1 restored). Requires moment-backed instances.
std::vector<double> pseudo_moments(const SdpInstance& sdp, const SolverResult& res);

/// How much tolerance the max-side certificate actually consumed, reported on
/// the scale of the problem data (no normalization). The cone shift is undone
/// before measuring: blocks are tested as Y_l - eta I.
struct AchievedNoise {
  double eps = 0;  // worst coefficient equation violation
  double eta = 0;  // worst eigenvalue below zero after the shift back
};
AchievedNoise achieved_noise_level(const SdpInstance& sdp, const SolverResult& res);

}  // namespace momentsos
