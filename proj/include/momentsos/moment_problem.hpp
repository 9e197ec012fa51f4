#pragma once

#include <optional>
#include <vector>

#include "momentsos/monomial.hpp"
#include "momentsos/polynomial.hpp"
#include "momentsos/rational.hpp"

namespace momentsos {

/// Coefficient-noise description attached to a problem: equality tolerance
/// eps, cone-shift tolerance eta. eps_by_alpha optionally overrides eps with
/// one radius per monomial of the degree-2j basis (empty = uniform eps).
struct NoiseModel {
  Rat eps{0};
  Rat eta{0};
  std::vector<Rat> eps_by_alpha;
};

/// min f(x) over the set cut out by g_l(x) >= 0, together with the relaxation
/// order and noise parameters. ball_N, when present, appends the constraint
/// N - |x|^2 >= 0 (never inferred from the other data).
struct MomentProblem {
  Polynomial f;
  std::vector<Polynomial> gs;
  int order = 1;
  std::optional<Rat> ball_N;
  NoiseModel noise;

  int nvars() const { return f.nvars(); }

  /// gs plus the ball constraint when ball_N is set.
  std::vector<Polynomial> effective_constraints() const;

  /// Throws std::invalid_argument on degree/order violations.
  void validate() const;
};

/// Pseudo-moment vector indexed by monomial_basis(n, 2*order).
struct MomentSequence {
  int nvars = 0;
  int order = 0;
  std::vector<Rat> y;

  static MomentSequence zero(int nvars, int order);
  /// Moments of the Dirac measure at point x (exact).
  static MomentSequence dirac(const std::vector<Rat>& x, int order);
  /// Convex combination sum_k w_k * dirac(x_k).
  static MomentSequence atomic(const std::vector<std::vector<Rat>>& points,
                               const std::vector<Rat>& weights, int order);

  std::size_t size() const { return y.size(); }
  bool normalized() const { return !y.empty() && y[0] == 1; }

  /// L_y(p) = sum_a p_a y_a; throws if deg(p) > 2*order or nvars mismatch.
  Rat riesz(const Polynomial& p) const;
  /// sum_a |y_a|.
  Rat l1_norm() const;
};

}  // namespace momentsos
