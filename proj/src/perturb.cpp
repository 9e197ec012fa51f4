#include "momentsos/perturb.hpp"

#include <stdexcept>

namespace momentsos {

int half_degree(const Polynomial& g) {
  int d = g.degree();
  if (d <= 0) return 0;
  return (d + 1) / 2;
}

Polynomial even_square_perturbation(const Polynomial& p, const std::vector<Polynomial>& gs,
                                    int j, const Rat& theta) {
  if (j < 0) throw std::invalid_argument("even_square_perturbation: j < 0");
  const int n = p.nvars();
  Polynomial out = p;
  if (theta == 0) return out;

  std::vector<Polynomial> all;
  all.push_back(Polynomial::constant(n, Rat(1)));
  for (const auto& g : gs) {
    if (g.nvars() != n) throw std::invalid_argument("constraint arity mismatch");
    all.push_back(g);
  }
  for (const auto& g : all) {
    int dl = half_degree(g);
    if (dl > j) throw std::invalid_argument("constraint degree exceeds relaxation order");
    Polynomial evens(n);
    for (const auto& b : monomial_basis(n, j - dl)) {
      Monomial sq = b;
      for (auto& e : sq.e) e *= 2;
      evens.add_term(sq, Rat(1));
    }
    out = out + (g * evens) * theta;
  }
  return out;
}

Polynomial l1_perturbation_orthant(const Polynomial& p, int j, const Rat& eps) {
  if (p.nvars() != 1) {
    throw std::invalid_argument("l1_perturbation_orthant: univariate polynomials only");
  }
  if (j < 0) throw std::invalid_argument("l1_perturbation_orthant: j < 0");
  Polynomial out = p;
  for (int k = 0; k <= 2 * j; ++k) {
    out.add_term(Monomial({std::vector<int>{k}}), eps);
  }
  return out;
}

}  // namespace momentsos
