#include "momentsos/localizing.hpp"

#include <stdexcept>

#include "momentsos/perturb.hpp"

namespace momentsos {

Rat LocalizingBlock::trace_coefficient(int alpha_index) const {
  Rat t(0);
  for (const auto& [r, c, v] : by_alpha[static_cast<std::size_t>(alpha_index)]) {
    if (r == c) t += v;
  }
  return t;
}

LocalizingSystem localizing_system(const MomentProblem& mp) {
  mp.validate();
  LocalizingSystem sys;
  sys.nvars = mp.nvars();
  sys.order = mp.order;
  sys.basis2j = monomial_basis(sys.nvars, 2 * sys.order);

  std::vector<Polynomial> gs = mp.effective_constraints();
  gs.insert(gs.begin(), Polynomial::constant(sys.nvars, Rat(1)));

  for (const auto& g : gs) {
    LocalizingBlock blk;
    blk.g = g;
    blk.half_deg = half_degree(g);
    if (sys.order - blk.half_deg < 0) {
      throw std::invalid_argument("relaxation order too small for constraint degree");
    }
    blk.row_basis = monomial_basis(sys.nvars, sys.order - blk.half_deg);
    blk.side = static_cast<int>(blk.row_basis.size());
    blk.by_alpha.assign(sys.basis2j.size(), {});
    for (int r = 0; r < blk.side; ++r) {
      for (int c = r; c < blk.side; ++c) {
        Monomial rc = blk.row_basis[static_cast<std::size_t>(r)] +
                      blk.row_basis[static_cast<std::size_t>(c)];
        for (const auto& [d, gd] : g.terms()) {
          int a = basis_index(sys.basis2j, rc + d);
          blk.by_alpha[static_cast<std::size_t>(a)].emplace_back(r, c, gd);
        }
      }
    }
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

std::vector<Rat> assemble_localizing(const LocalizingBlock& block, const std::vector<Rat>& y) {
  std::size_t s = static_cast<std::size_t>(block.side);
  std::vector<Rat> M(s * s, Rat(0));
  for (std::size_t a = 0; a < block.by_alpha.size(); ++a) {
    const Rat& ya = y[a];
    if (ya == 0) continue;
    for (const auto& [r, c, v] : block.by_alpha[a]) {
      Rat add = v * ya;
      M[static_cast<std::size_t>(r) * s + static_cast<std::size_t>(c)] += add;
      if (r != c) M[static_cast<std::size_t>(c) * s + static_cast<std::size_t>(r)] += add;
    }
  }
  return M;
}

std::vector<Rat> localizing_brute_force(const Polynomial& g, int order,
                                        const MomentSequence& y) {
  int n = g.nvars();
  auto rows = monomial_basis(n, order - half_degree(g));
  std::size_t s = rows.size();
  std::vector<Rat> M(s * s, Rat(0));
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) {
      Polynomial shifted(n);
      for (const auto& [d, gd] : g.terms()) shifted.add_term(rows[r] + rows[c] + d, gd);
      M[r * s + c] = y.riesz(shifted);
    }
  }
  return M;
}

Polynomial trace_penalty_polynomial(const LocalizingSystem& sys, const Rat& eta) {
  Polynomial p(sys.nvars);
  for (std::size_t a = 0; a < sys.basis2j.size(); ++a) {
    Rat t(0);
    for (const auto& blk : sys.blocks) t += blk.trace_coefficient(static_cast<int>(a));
    p.add_term(sys.basis2j[a], eta * t);
  }
  return p;
}

}  // namespace momentsos
