#include "momentsos/robust.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "momentsos/build.hpp"
#include "momentsos/perturb.hpp"

namespace momentsos {

namespace {

int sign_of(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

std::vector<Rat> to_rat(const Eigen::VectorXd& x) {
  std::vector<Rat> out(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = rat_of_double(x[i]);
  return out;
}

}  // namespace

WorstCasePolynomial worst_case_polynomial(const Polynomial& f, const MomentSequence& y,
                                          const Rat& eps) {
  if (f.nvars() != y.nvars) throw std::invalid_argument("worst_case_polynomial: nvars mismatch");
  if (f.degree() > 2 * y.order)
    throw std::invalid_argument("worst_case_polynomial: objective degree exceeds the basis");
  const auto basis = monomial_basis(y.nvars, 2 * y.order);
  if (basis.size() != y.size())
    throw std::invalid_argument("worst_case_polynomial: moment vector length mismatch");

  WorstCasePolynomial out{f, eps, {}, f};
  out.signs.resize(basis.size(), 0);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    int s = sign_of(y.y[a]);
    out.signs[a] = s;
    if (s != 0 && eps != 0) out.tilde.add_term(basis[a], s > 0 ? eps : Rat(-eps));
  }
  return out;
}

Rat robust_objective_eta(const MomentProblem& mp, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != mp.nvars())
    throw std::invalid_argument("robust_objective_eta: dimension mismatch");
  return even_square_perturbation(mp.f, mp.effective_constraints(), mp.order, mp.noise.eta)
      .eval(x);
}

double robust_objective_eta(const MomentProblem& mp, const Eigen::VectorXd& x) {
  return to_double(robust_objective_eta(mp, to_rat(x)));
}

Rat robust_objective_eps(const MomentProblem& mp, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != mp.nvars())
    throw std::invalid_argument("robust_objective_eps: dimension mismatch");
  Rat total = mp.f.eval(x);
  if (mp.noise.eps == 0) return total;
  Rat sum_abs{0};
  for (const auto& m : monomial_basis(mp.nvars(), 2 * mp.order)) {
    Rat term{1};
    for (int v = 0; v < m.nvars(); ++v)
      for (int k = 0; k < m.e[static_cast<std::size_t>(v)]; ++k) term *= x[static_cast<std::size_t>(v)];
    sum_abs += abs(term);
  }
  return total + mp.noise.eps * sum_abs;
}

double robust_objective_eps(const MomentProblem& mp, const Eigen::VectorXd& x) {
  return to_double(robust_objective_eps(mp, to_rat(x)));
}

GameReport verify_minimax(const MomentProblem& mp, FormulationKind kind, const SolverConfig& scfg,
                          int corner_budget_log2, unsigned corner_seed) {
  GameReport rep;
  rep.kind = kind;

  SdpInstance inst;
  SdpInstance nominal;  // kept for the canonical corner scan
  switch (kind) {
    case FormulationKind::PRIORITY_TRACE:
      inst = build_priority_trace(mp);
      break;
    case FormulationKind::PRIORITY_PSD:
      inst = build_priority_psd(mp).primal_l1;
      break;
    case FormulationKind::CANONICAL_ROBUST:
      nominal = build_nominal(mp).primal;
      inst = build_canonical_robust(nominal, mp.noise.eps);
      break;
    default:
      throw std::invalid_argument("verify_minimax: unsupported formulation");
  }

  SolverResult res = solve_sdp(inst, scfg);
  rep.status = res.status;
  const double off = to_double(inst.offset);
  rep.value_penalized = off + res.primal_objective;
  rep.value_maxmin = off + res.dual_objective;
  rep.discrepancy = std::abs(rep.value_penalized - rep.value_maxmin);
  const double scale = 1 + std::abs(rep.value_penalized) + std::abs(rep.value_maxmin);
  rep.pass_equality =
      res.status == SolveStatus::OPTIMAL && rep.discrepancy <= 10 * scfg.epsilon_star * scale;

  if (kind == FormulationKind::CANONICAL_ROBUST) {
    // One inner minimization per sampled corner of the coefficient box; each
    // value is a valid play for the maximizing player, so the best of them
    // must stay below the penalized optimum.
    rep.corner_checked = true;
    const int m = nominal.num_vars();
    const Rat eps = mp.noise.eps;
    std::vector<std::vector<int>> patterns;
    if (m <= corner_budget_log2) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        std::vector<int> s(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? 1 : -1;
        patterns.push_back(std::move(s));
      }
    } else {
      std::mt19937 rng(corner_seed);
      std::bernoulli_distribution coin(0.5);
      for (int t = 0; t < (1 << corner_budget_log2); ++t) {
        std::vector<int> s(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = coin(rng) ? 1 : -1;
        patterns.push_back(std::move(s));
      }
    }
    bool first = true;
    for (const auto& s : patterns) {
      std::vector<Rat> c = nominal.c;
      for (int i = 0; i < m; ++i)
        c[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i)] > 0 ? eps : Rat(-eps);
      SolverResult corner = solve_sdp(with_objective(nominal, std::move(c)), scfg);
      if (corner.status != SolveStatus::OPTIMAL) continue;
      const double v = to_double(nominal.offset) + corner.primal_objective;
      if (first || v > rep.corner_bound) rep.corner_bound = v;
      first = false;
    }
    rep.pass_corner = !first && rep.corner_bound <= rep.value_penalized + 10 * scfg.epsilon_star * scale;
  }
  return rep;
}

}  // namespace momentsos
