#pragma once

#include "momentsos/moment_problem.hpp"
#include "momentsos/sdp_instance.hpp"

namespace momentsos {

/// Two views of one block of data: the min side is the moment relaxation over
/// y (y_0 eliminated into the offset), the max side the sum-of-squares bound.
struct NominalPair {
  SdpInstance primal;
  SdpInstance dual;
};

NominalPair build_nominal(const MomentProblem& mp);

/// Box-perturbed equalities plus eta-shifted cones, encoded through its
/// penalized min side (trace + l1 penalties); the max side of the same data
/// recovers the named bound lambda = offset + <F_0, Y>.
SdpInstance build_noise_dual(const MomentProblem& mp);

/// eps = 0 regime: objective gains the eta-weighted trace of every localizing
/// block, which is linear in y. Uses mp.noise.eta.
SdpInstance build_priority_trace(const MomentProblem& mp);

/// eta = 0 regime: objective gains eps * |y|_1 via split variables in a
/// diagonal block. Uses mp.noise.eps.
struct PsdPair {
  SdpInstance primal_l1;
  SdpInstance dual_box;
};
PsdPair build_priority_psd(const MomentProblem& mp);

/// l1-penalizes the min side of an arbitrary conic instance: variables are
/// split, objective becomes c.x + eps |x|_1; the max side of the result is
/// the box-perturbed version of the input's max side.
SdpInstance build_canonical_robust(const SdpInstance& sdp, const Rat& eps);

/// Same data with a replacement objective vector (used for corner scans).
SdpInstance with_objective(const SdpInstance& sdp, std::vector<Rat> c);

}  // namespace momentsos
