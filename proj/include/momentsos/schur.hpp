#pragma once

#include <Eigen/Dense>
#include <vector>

#include "momentsos/block_matrix.hpp"
#include "momentsos/sdp_instance.hpp"

namespace momentsos {

/// Double-precision view of an instance, entries grouped per constraint
/// matrix so the iteration never touches rationals.
struct CompiledSdp {
  struct Ent {
    int block;
    int row;
    int col;
    double v;
  };

  int m = 0;
  std::vector<int> sizes;
  Eigen::VectorXd c;
  double offset = 0;
  FormSide side = FormSide::PRIMAL;
  std::vector<std::vector<Ent>> F;  // index 0 = constant matrix, then 1..m
};

CompiledSdp compile_sdp(const SdpInstance& sdp);

/// <F_i, A> with the off-diagonal mirror factor.
double dot_mat(const std::vector<CompiledSdp::Ent>& fi, const BlockMatrix& a);

/// out += t * F_i (mirrored into both triangles of dense blocks).
void add_scaled(BlockMatrix& out, const std::vector<CompiledSdp::Ent>& fi, double t);

/// sum_i F_i x_i - F_0 as a dense block matrix.
BlockMatrix combination(const CompiledSdp& p, const Eigen::VectorXd& x);

/// (<F_1, A>, ..., <F_m, A>).
Eigen::VectorXd constraint_values(const CompiledSdp& p, const BlockMatrix& a);

/// Coefficient matrix of the reduced Newton system, G_ij = <F_i, X^{-1} F_j Y>
/// (not symmetric for this direction; factor with LU). The serial and
/// parallel kernels perform identical arithmetic per column, so their outputs
/// match bit for bit; the parallel one distributes columns across threads.
Eigen::MatrixXd schur_serial(const CompiledSdp& p, const BlockFactor& xf,
                             const BlockMatrix& y);
Eigen::MatrixXd schur_parallel(const CompiledSdp& p, const BlockFactor& xf,
                               const BlockMatrix& y);

}  // namespace momentsos
