#include "momentsos/moment_problem.hpp"

#include <stdexcept>

namespace momentsos {

std::vector<Polynomial> MomentProblem::effective_constraints() const {
  std::vector<Polynomial> out = gs;
  if (ball_N) {
    Polynomial ball = Polynomial::constant(nvars(), *ball_N);
    for (int i = 0; i < nvars(); ++i) {
      ball = ball - Polynomial::variable(nvars(), i, 2);
    }
    out.push_back(ball);
  }
  return out;
}

void MomentProblem::validate() const {
  if (order < 1) throw std::invalid_argument("relaxation order must be >= 1");
  if (f.degree() > 2 * order) {
    throw std::invalid_argument("objective degree exceeds 2*order");
  }
  for (const auto& g : effective_constraints()) {
    if (g.nvars() != nvars()) throw std::invalid_argument("constraint variable count mismatch");
    if (g.is_zero()) throw std::invalid_argument("zero constraint polynomial");
    if (g.degree() > 2 * order) throw std::invalid_argument("constraint degree exceeds 2*order");
  }
  if (noise.eps < 0 || noise.eta < 0) throw std::invalid_argument("noise parameters must be >= 0");
}

MomentSequence MomentSequence::zero(int nvars, int order) {
  MomentSequence s;
  s.nvars = nvars;
  s.order = order;
  s.y.assign(basis_size(nvars, 2 * order), Rat(0));
  return s;
}

MomentSequence MomentSequence::dirac(const std::vector<Rat>& x, int order) {
  int n = static_cast<int>(x.size());
  MomentSequence s = zero(n, order);
  auto basis = monomial_basis(n, 2 * order);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rat v(1);
    for (int k = 0; k < n; ++k) {
      v *= rat_pow(x[static_cast<std::size_t>(k)],
                   static_cast<unsigned long>(basis[i].e[static_cast<std::size_t>(k)]));
    }
    s.y[i] = v;
  }
  return s;
}

MomentSequence MomentSequence::atomic(const std::vector<std::vector<Rat>>& points,
                                      const std::vector<Rat>& weights, int order) {
  if (points.empty() || points.size() != weights.size()) {
    throw std::invalid_argument("atomic: points/weights mismatch");
  }
  MomentSequence s = zero(static_cast<int>(points[0].size()), order);
  for (std::size_t k = 0; k < points.size(); ++k) {
    MomentSequence d = dirac(points[k], order);
    for (std::size_t i = 0; i < s.y.size(); ++i) s.y[i] += weights[k] * d.y[i];
  }
  return s;
}

Rat MomentSequence::riesz(const Polynomial& p) const {
  if (p.nvars() != nvars) throw std::invalid_argument("riesz: variable count mismatch");
  if (p.degree() > 2 * order) throw std::invalid_argument("riesz: degree exceeds 2*order");
  auto basis = monomial_basis(nvars, 2 * order);
  Rat acc(0);
  for (const auto& [m, c] : p.terms()) {
    int idx = basis_index(basis, m);
    acc += c * y[static_cast<std::size_t>(idx)];
  }
  return acc;
}

Rat MomentSequence::l1_norm() const {
  Rat acc(0);
  for (const auto& v : y) acc += rat_abs(v);
  return acc;
}

}  // namespace momentsos
