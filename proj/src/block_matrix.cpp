#include "momentsos/block_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <limits>
#include <stdexcept>

namespace momentsos {

BlockMatrix BlockMatrix::zero(const std::vector<int>& sizes) {
  BlockMatrix out;
  out.sizes = sizes;
  out.blocks.reserve(sizes.size());
  for (int s : sizes) {
    int n = std::abs(s);
    out.blocks.emplace_back(Eigen::MatrixXd::Zero(n, s < 0 ? 1 : n));
  }
  return out;
}

BlockMatrix BlockMatrix::identity(const std::vector<int>& sizes, double scale) {
  BlockMatrix out = zero(sizes);
  for (int b = 0; b < out.num_blocks(); ++b) {
    if (out.is_diag(b)) {
      out.blocks[static_cast<std::size_t>(b)].setConstant(scale);
    } else {
      out.blocks[static_cast<std::size_t>(b)] =
          Eigen::MatrixXd::Identity(out.side(b), out.side(b)) * scale;
    }
  }
  return out;
}

int BlockMatrix::total_side() const {
  int k = 0;
  for (int s : sizes) k += std::abs(s);
  return k;
}

void BlockMatrix::set_zero() {
  for (auto& blk : blocks) blk.setZero();
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] += o.blocks[b];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] -= o.blocks[b];
  return *this;
}

BlockMatrix& BlockMatrix::operator*=(double t) {
  for (auto& blk : blocks) blk *= t;
  return *this;
}

double BlockMatrix::trace() const {
  double t = 0;
  for (int b = 0; b < num_blocks(); ++b) {
    t += is_diag(b) ? blocks[static_cast<std::size_t>(b)].sum()
                    : blocks[static_cast<std::size_t>(b)].trace();
  }
  return t;
}

double BlockMatrix::inner(const BlockMatrix& o) const {
  double t = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    t += blocks[b].cwiseProduct(o.blocks[b]).sum();
  }
  return t;
}

double BlockMatrix::frobenius_norm() const {
  double t = 0;
  for (const auto& blk : blocks) t += blk.squaredNorm();
  return std::sqrt(t);
}

double BlockMatrix::max_abs() const {
  double t = 0;
  for (const auto& blk : blocks) {
    if (blk.size() > 0) t = std::max(t, blk.cwiseAbs().maxCoeff());
  }
  return t;
}

void BlockMatrix::symmetrize() {
  for (int b = 0; b < num_blocks(); ++b) {
    if (!is_diag(b)) {
      auto& blk = blocks[static_cast<std::size_t>(b)];
      blk = ((blk + blk.transpose()) * 0.5).eval();
    }
  }
}

BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
BlockMatrix operator*(BlockMatrix a, double t) { return a *= t; }

BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b) {
  BlockMatrix out = BlockMatrix::zero(a.sizes);
  for (int blk = 0; blk < a.num_blocks(); ++blk) {
    std::size_t i = static_cast<std::size_t>(blk);
    if (a.is_diag(blk)) {
      out.blocks[i] = a.blocks[i].cwiseProduct(b.blocks[i]);
    } else {
      out.blocks[i] = a.blocks[i] * b.blocks[i];
    }
  }
  return out;
}

BlockFactor factorize_psd(const BlockMatrix& a) {
  BlockFactor f;
  f.sizes = a.sizes;
  f.llt.resize(a.blocks.size());
  f.diag.resize(a.blocks.size());
  f.ok = true;
  for (int b = 0; b < a.num_blocks(); ++b) {
    std::size_t i = static_cast<std::size_t>(b);
    if (a.is_diag(b)) {
      f.diag[i] = a.blocks[i].col(0);
      if ((f.diag[i].array() <= 0).any()) f.ok = false;
    } else {
      f.llt[i].compute(a.blocks[i]);
      if (f.llt[i].info() != Eigen::Success) f.ok = false;
    }
  }
  return f;
}

BlockMatrix solve_psd(const BlockFactor& f, const BlockMatrix& r) {
  BlockMatrix out = r;
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    if (f.sizes[b] < 0) {
      out.blocks[b] = r.blocks[b].col(0).cwiseQuotient(f.diag[b]);
    } else {
      out.blocks[b] = f.llt[b].solve(r.blocks[b]);
    }
  }
  return out;
}

BlockMatrix inverse_psd(const BlockFactor& f) {
  BlockMatrix out;
  out.sizes = f.sizes;
  out.blocks.reserve(f.sizes.size());
  for (std::size_t b = 0; b < f.sizes.size(); ++b) {
    int n = std::abs(f.sizes[b]);
    if (f.sizes[b] < 0) {
      out.blocks.emplace_back(f.diag[b].cwiseInverse());
    } else {
      out.blocks.emplace_back(f.llt[b].solve(Eigen::MatrixXd::Identity(n, n)));
    }
  }
  return out;
}

double max_step(const BlockFactor& f, const BlockMatrix& da) {
  double step = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < f.sizes.size(); ++b) {
    if (f.sizes[b] < 0) {
      const auto& x = f.diag[b];
      const auto d = da.blocks[b].col(0);
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (d[i] < 0) step = std::min(step, -x[i] / d[i]);
      }
    } else {
      // A + t dA psd  <=>  I + t L^{-1} dA L^{-T} psd.
      const auto& L = f.llt[b].matrixL();
      Eigen::MatrixXd half = L.solve(da.blocks[b]);
      Eigen::MatrixXd scaled = L.solve(half.transpose()).transpose();
      scaled = ((scaled + scaled.transpose()) * 0.5).eval();
      double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                      scaled, Eigen::EigenvaluesOnly)
                      .eigenvalues()
                      .minCoeff();
      if (lo < 0) step = std::min(step, -1.0 / lo);
    }
  }
  return step;
}

double min_eigenvalue(const BlockMatrix& a) {
  double lo = std::numeric_limits<double>::infinity();
  for (int b = 0; b < a.num_blocks(); ++b) {
    std::size_t i = static_cast<std::size_t>(b);
    if (a.blocks[i].size() == 0) continue;
    if (a.is_diag(b)) {
      lo = std::min(lo, a.blocks[i].minCoeff());
    } else {
      lo = std::min(lo, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                            a.blocks[i], Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .minCoeff());
    }
  }
  return lo;
}

}  // namespace momentsos
