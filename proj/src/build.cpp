#include "momentsos/build.hpp"

#include <stdexcept>

namespace momentsos {

namespace {

Rat eps_at(const NoiseModel& noise, std::size_t alpha_index) {
  if (noise.eps_by_alpha.empty()) return noise.eps;
  if (alpha_index >= noise.eps_by_alpha.size()) {
    throw std::invalid_argument("eps_by_alpha shorter than the monomial basis");
  }
  return noise.eps_by_alpha[alpha_index];
}

bool has_l1_term(const NoiseModel& noise) {
  return noise.eps != 0 || !noise.eps_by_alpha.empty();
}

/// Shared core. Encodes, over variables x = (y_a)_{a != 0} (+ split u when
/// with_l1), the min-side program
///   min sum_a (f_a + eta * sum_l tr C^l_a) y_a (+ sum eps_a u_a)
///   s.t. sum_a C^l_a y_a  (PSD blocks),  u_a -+ y_a >= 0 (diagonal block),
/// with the a = 0 terms of the objective folded into the offset.
SdpInstance assemble_moment_instance(const MomentProblem& mp, bool with_l1, const Rat& eta) {
  auto sys = std::make_shared<const LocalizingSystem>(localizing_system(mp));
  std::size_t M = sys->monomial_count();
  int y_count = static_cast<int>(M) - 1;
  int u_count = with_l1 ? y_count : 0;

  SdpInstance sdp;
  sdp.c.assign(static_cast<std::size_t>(y_count + u_count), Rat(0));

  MomentMeta meta;
  meta.system = sys;
  meta.f_alpha.assign(M, Rat(0));
  for (const auto& [m, v] : mp.f.terms()) {
    meta.f_alpha[static_cast<std::size_t>(basis_index(sys->basis2j, m))] = v;
  }
  meta.y_count = y_count;
  meta.u_count = u_count;

  // Objective: f plus the trace penalty, a = 0 part goes to the offset.
  for (std::size_t a = 0; a < M; ++a) {
    Rat coeff = meta.f_alpha[a];
    if (eta != 0) {
      for (const auto& blk : sys->blocks) {
        coeff += eta * blk.trace_coefficient(static_cast<int>(a));
      }
    }
    if (a == 0) {
      sdp.offset += coeff;
    } else {
      sdp.c[a - 1] = coeff;
    }
  }
  if (with_l1) {
    sdp.offset += eps_at(mp.noise, 0);  // |y_0| = 1 contributes its own radius
    for (std::size_t a = 1; a < M; ++a) {
      sdp.c[static_cast<std::size_t>(y_count) + a - 1] = eps_at(mp.noise, a);
    }
  }

  // PSD blocks: sum_{a != 0} C^l_a y_a - (-C^l_0) >= 0.
  for (std::size_t l = 0; l < sys->blocks.size(); ++l) {
    const auto& blk = sys->blocks[l];
    sdp.block_sizes.push_back(blk.side);
    for (std::size_t a = 0; a < M; ++a) {
      for (const auto& [r, c_, v] : blk.by_alpha[a]) {
        sdp.entries.push_back({a == 0 ? 0 : static_cast<int>(a), static_cast<int>(l), r, c_,
                               a == 0 ? Rat(-v) : v});
      }
    }
  }

  // Split rows u_a - y_a >= 0 and u_a + y_a >= 0 in one diagonal block.
  if (with_l1) {
    int lp_block = sdp.num_blocks();
    sdp.block_sizes.push_back(-2 * y_count);
    for (int a = 1; a <= y_count; ++a) {
      int p = 2 * (a - 1);
      sdp.entries.push_back({a, lp_block, p, p, Rat(-1)});
      sdp.entries.push_back({y_count + a, lp_block, p, p, Rat(1)});
      sdp.entries.push_back({a, lp_block, p + 1, p + 1, Rat(1)});
      sdp.entries.push_back({y_count + a, lp_block, p + 1, p + 1, Rat(1)});
    }
  }

  sdp.meta = std::move(meta);
  sdp.canonicalize();
  return sdp;
}

}  // namespace

NominalPair build_nominal(const MomentProblem& mp) {
  SdpInstance base = assemble_moment_instance(mp, false, Rat(0));
  NominalPair pair{base, base};
  pair.primal.kind = FormulationKind::NOMINAL_PRIMAL;
  pair.primal.side = FormSide::PRIMAL;
  pair.dual.kind = FormulationKind::NOMINAL_DUAL;
  pair.dual.side = FormSide::DUAL;
  return pair;
}

SdpInstance build_noise_dual(const MomentProblem& mp) {
  SdpInstance sdp = assemble_moment_instance(mp, has_l1_term(mp.noise), mp.noise.eta);
  sdp.kind = FormulationKind::NOISE_DUAL;
  sdp.side = FormSide::DUAL;
  sdp.eps = mp.noise.eps;
  sdp.eta = mp.noise.eta;
  return sdp;
}

SdpInstance build_priority_trace(const MomentProblem& mp) {
  SdpInstance sdp = assemble_moment_instance(mp, false, mp.noise.eta);
  sdp.kind = FormulationKind::PRIORITY_TRACE;
  sdp.side = FormSide::PRIMAL;
  sdp.eta = mp.noise.eta;
  return sdp;
}

PsdPair build_priority_psd(const MomentProblem& mp) {
  SdpInstance base = assemble_moment_instance(mp, has_l1_term(mp.noise), Rat(0));
  base.eps = mp.noise.eps;
  PsdPair pair{base, base};
  pair.primal_l1.kind = FormulationKind::PRIORITY_PSD;
  pair.primal_l1.side = FormSide::PRIMAL;
  pair.dual_box.kind = FormulationKind::PRIORITY_PSD;
  pair.dual_box.side = FormSide::DUAL;
  return pair;
}

SdpInstance build_canonical_robust(const SdpInstance& sdp, const Rat& eps) {
  sdp.validate();
  int n = sdp.num_vars();
  SdpInstance out;
  out.kind = FormulationKind::CANONICAL_ROBUST;
  out.side = FormSide::PRIMAL;
  out.eps = eps;
  out.offset = sdp.offset;
  if (sdp.meta) {
    out.meta = sdp.meta;
    out.meta->u_count = n;
  }
  out.block_sizes = sdp.block_sizes;
  out.c = sdp.c;
  out.c.insert(out.c.end(), static_cast<std::size_t>(n), eps);
  out.entries = sdp.entries;
  int lp_block = out.num_blocks();
  out.block_sizes.push_back(-2 * n);
  for (int i = 1; i <= n; ++i) {
    int p = 2 * (i - 1);
    out.entries.push_back({i, lp_block, p, p, Rat(-1)});
    out.entries.push_back({n + i, lp_block, p, p, Rat(1)});
    out.entries.push_back({i, lp_block, p + 1, p + 1, Rat(1)});
    out.entries.push_back({n + i, lp_block, p + 1, p + 1, Rat(1)});
  }
  out.canonicalize();
  return out;
}

SdpInstance with_objective(const SdpInstance& sdp, std::vector<Rat> c) {
  if (c.size() != sdp.c.size()) throw std::invalid_argument("objective length mismatch");
  SdpInstance out = sdp;
  out.c = std::move(c);
  return out;
}

}  // namespace momentsos
