#include "momentsos/schur.hpp"

namespace momentsos {

CompiledSdp compile_sdp(const SdpInstance& sdp) {
  sdp.validate();
  CompiledSdp p;
  p.m = sdp.num_vars();
  p.sizes = sdp.block_sizes;
  p.c.resize(p.m);
  for (int i = 0; i < p.m; ++i) p.c[i] = to_double(sdp.c[static_cast<std::size_t>(i)]);
  p.offset = to_double(sdp.offset);
  p.side = sdp.side;
  p.F.assign(static_cast<std::size_t>(p.m) + 1, {});
  for (const auto& e : sdp.entries) {
    p.F[static_cast<std::size_t>(e.mat)].push_back({e.block, e.row, e.col, to_double(e.value)});
  }
  return p;
}

double dot_mat(const std::vector<CompiledSdp::Ent>& fi, const BlockMatrix& a) {
  double t = 0;
  for (const auto& e : fi) {
    const auto& blk = a.blocks[static_cast<std::size_t>(e.block)];
    if (a.is_diag(e.block)) {
      t += e.v * blk(e.row, 0);
    } else if (e.row == e.col) {
      t += e.v * blk(e.row, e.col);
    } else {
      t += e.v * (blk(e.row, e.col) + blk(e.col, e.row));
    }
  }
  return t;
}

void add_scaled(BlockMatrix& out, const std::vector<CompiledSdp::Ent>& fi, double t) {
  for (const auto& e : fi) {
    auto& blk = out.blocks[static_cast<std::size_t>(e.block)];
    if (out.is_diag(e.block)) {
      blk(e.row, 0) += t * e.v;
    } else {
      blk(e.row, e.col) += t * e.v;
      if (e.row != e.col) blk(e.col, e.row) += t * e.v;
    }
  }
}

BlockMatrix combination(const CompiledSdp& p, const Eigen::VectorXd& x) {
  BlockMatrix out = BlockMatrix::zero(p.sizes);
  for (int i = 1; i <= p.m; ++i) add_scaled(out, p.F[static_cast<std::size_t>(i)], x[i - 1]);
  add_scaled(out, p.F[0], -1.0);
  return out;
}

Eigen::VectorXd constraint_values(const CompiledSdp& p, const BlockMatrix& a) {
  Eigen::VectorXd v(p.m);
  for (int i = 1; i <= p.m; ++i) v[i - 1] = dot_mat(p.F[static_cast<std::size_t>(i)], a);
  return v;
}

namespace {

/// W = X^{-1} F_j Y for one scalar index j; blocks F_j never touches stay
/// zero and skip the triangular solves.
BlockMatrix sandwich_column(const CompiledSdp& p, const BlockFactor& xf,
                            const BlockMatrix& y, int j) {
  BlockMatrix t = BlockMatrix::zero(p.sizes);
  std::vector<char> touched(p.sizes.size(), 0);
  for (const auto& e : p.F[static_cast<std::size_t>(j)]) {
    std::size_t b = static_cast<std::size_t>(e.block);
    touched[b] = 1;
    const auto& yb = y.blocks[b];
    if (t.is_diag(e.block)) {
      t.blocks[b](e.row, 0) += e.v * yb(e.row, 0);
    } else {
      t.blocks[b].row(e.row) += e.v * yb.row(e.col);
      if (e.row != e.col) t.blocks[b].row(e.col) += e.v * yb.row(e.row);
    }
  }
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    if (!touched[b]) continue;
    if (p.sizes[b] < 0) {
      t.blocks[b] = t.blocks[b].col(0).cwiseQuotient(xf.diag[b]).eval();
    } else {
      t.blocks[b] = xf.llt[b].solve(t.blocks[b]);
    }
  }
  return t;
}

}  // namespace

Eigen::MatrixXd schur_serial(const CompiledSdp& p, const BlockFactor& xf,
                             const BlockMatrix& y) {
  Eigen::MatrixXd g(p.m, p.m);
  for (int j = 1; j <= p.m; ++j) {
    BlockMatrix w = sandwich_column(p, xf, y, j);
    for (int i = 1; i <= p.m; ++i) {
      g(i - 1, j - 1) = dot_mat(p.F[static_cast<std::size_t>(i)], w);
    }
  }
  return g;
}

Eigen::MatrixXd schur_parallel(const CompiledSdp& p, const BlockFactor& xf,
                               const BlockMatrix& y) {
  Eigen::MatrixXd g(p.m, p.m);
#pragma omp parallel for schedule(dynamic, 4)
  for (int j = 1; j <= p.m; ++j) {
    BlockMatrix w = sandwich_column(p, xf, y, j);
    for (int i = 1; i <= p.m; ++i) {
      g(i - 1, j - 1) = dot_mat(p.F[static_cast<std::size_t>(i)], w);
    }
  }
  return g;
}

}  // namespace momentsos
