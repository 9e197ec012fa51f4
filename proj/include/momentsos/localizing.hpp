#pragma once

#include <tuple>
#include <vector>

#include "momentsos/moment_problem.hpp"

namespace momentsos {

/// One constraint's family of coefficient matrices: the localizing matrix of
/// g at order j decomposes as M(g y) = sum_a C_a y_a, where C_a has entry
/// (b, c) = g_{a-b-c}. Entries are stored per monomial index a of the
/// degree-2j basis, upper triangle only (row <= col).
struct LocalizingBlock {
  Polynomial g;
  int half_deg = 0;                      // ceil(deg g / 2)
  int side = 0;                          // C(n + j - half_deg, n)
  std::vector<Monomial> row_basis;       // monomials of degree <= j - half_deg
  std::vector<std::vector<std::tuple<int, int, Rat>>> by_alpha;

  /// sum of diagonal coefficients of C_a: trace(C_a).
  Rat trace_coefficient(int alpha_index) const;
};

/// All coefficient families of a problem: block 0 is the moment matrix
/// (g_0 = 1), then one block per constraint, ball constraint last.
struct LocalizingSystem {
  int nvars = 0;
  int order = 0;
  std::vector<Monomial> basis2j;         // monomials of degree <= 2j
  std::vector<LocalizingBlock> blocks;

  std::size_t monomial_count() const { return basis2j.size(); }
};

/// Builds the full family; throws if some j - half_deg < 0.
LocalizingSystem localizing_system(const MomentProblem& mp);

/// Serial reference assembly: sum_a C_a y_a as a dense symmetric matrix in
/// row-major order (side x side).
std::vector<Rat> assemble_localizing(const LocalizingBlock& block,
                                     const std::vector<Rat>& y);

/// Independent entrywise oracle: entry (b, c) = L_y(g * x^{b+c}).
std::vector<Rat> localizing_brute_force(const Polynomial& g, int order,
                                        const MomentSequence& y);

/// eta * sum_l trace(C^l_a) for every a, as a polynomial in x; equals the
/// even-square perturbation of 0 with magnitude eta.
Polynomial trace_penalty_polynomial(const LocalizingSystem& sys, const Rat& eta);

}  // namespace momentsos
