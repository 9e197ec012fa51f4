#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <vector>

namespace momentsos {

/// Block-diagonal symmetric matrix over the signed size list used by
/// SdpInstance: positive sizes are dense s x s blocks, negative sizes are
/// diagonal blocks stored as an s x 1 column.
struct BlockMatrix {
  std::vector<int> sizes;
  std::vector<Eigen::MatrixXd> blocks;

  static BlockMatrix zero(const std::vector<int>& sizes);
  static BlockMatrix identity(const std::vector<int>& sizes, double scale = 1.0);

  int num_blocks() const { return static_cast<int>(sizes.size()); }
  bool is_diag(int b) const { return sizes[static_cast<std::size_t>(b)] < 0; }
  int side(int b) const { return std::abs(sizes[static_cast<std::size_t>(b)]); }
  /// Sum of block sides (the conic dimension driving the barrier parameter).
  int total_side() const;

  void set_zero();
  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  BlockMatrix& operator*=(double t);

  double trace() const;
  /// Frobenius inner product sum_b <A_b, B_b>.
  double inner(const BlockMatrix& o) const;
  double frobenius_norm() const;
  /// Largest |entry| across blocks.
  double max_abs() const;
  /// (A + A^T) / 2 blockwise, used after products that break exact symmetry.
  void symmetrize();
};

BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b);
BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b);
BlockMatrix operator*(BlockMatrix a, double t);

/// Blockwise product A * B (not symmetric in general).
BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b);

/// Cholesky factors of a positive definite block matrix.
struct BlockFactor {
  std::vector<Eigen::LLT<Eigen::MatrixXd>> llt;  // dense blocks only
  std::vector<Eigen::VectorXd> diag;             // diagonal blocks only
  std::vector<int> sizes;
  bool ok = false;
};

/// Attempts the factorization; ok = false when a block is not positive
/// definite (the caller decides whether that is an error).
BlockFactor factorize_psd(const BlockMatrix& a);

/// A^{-1} * r blockwise; r need not be symmetric.
BlockMatrix solve_psd(const BlockFactor& f, const BlockMatrix& r);

BlockMatrix inverse_psd(const BlockFactor& f);

/// sup { t >= 0 : A + t * dA psd } for the factored A; huge() when the
/// direction never leaves the cone.
double max_step(const BlockFactor& f, const BlockMatrix& da);

/// Smallest eigenvalue across blocks.
double min_eigenvalue(const BlockMatrix& a);

}  // namespace momentsos
