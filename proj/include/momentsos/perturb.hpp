#pragma once

#include <vector>

#include "momentsos/polynomial.hpp"

namespace momentsos {

/// ceil(deg(g)/2); the localizing block for g at order j has rows indexed by
/// monomials of degree <= j - half_degree(g).
int half_degree(const Polynomial& g);

/// p + theta * sum_l g_l * sum_{|b| <= j - half_degree(g_l)} x^{2b},
/// where g_0 = 1 is always included ahead of the supplied constraints.
/// With no constraints this is the classic all-even-squares perturbation
/// p + theta * sum_{|b| <= j} x^{2b}.
Polynomial even_square_perturbation(const Polynomial& p, const std::vector<Polynomial>& gs,
                                    int j, const Rat& theta);

/// Univariate only: p + eps * sum_{k=0}^{2j} x^k. On [0, inf) this equals the
/// worst-case coefficient perturbation p + eps * sum |x^k|.
Polynomial l1_perturbation_orthant(const Polynomial& p, int j, const Rat& eps);

}  // namespace momentsos
