#include "momentsos/extract.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "momentsos/perturb.hpp"
#include "momentsos/robust.hpp"

namespace momentsos {

std::string extract_status_name(ExtractStatus s) {
  switch (s) {
    case ExtractStatus::FLAT: return "FLAT";
    case ExtractStatus::NOT_FLAT: return "NOT_FLAT";
    case ExtractStatus::ILL_CONDITIONED: return "ILL_CONDITIONED";
  }
  return "?";
}

namespace {

/// Moment matrix of order k assembled from the degree-2j vector.
Eigen::MatrixXd moment_matrix(const Eigen::VectorXd& y, const std::vector<Monomial>& full,
                              const std::vector<Monomial>& rows) {
  const int s = static_cast<int>(rows.size());
  Eigen::MatrixXd M(s, s);
  for (int b = 0; b < s; ++b) {
    for (int c = b; c < s; ++c) {
      int idx = basis_index(full, rows[static_cast<std::size_t>(b)] + rows[static_cast<std::size_t>(c)]);
      M(b, c) = M(c, b) = y[idx];
    }
  }
  return M;
}

int numerical_rank(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0 || sv[0] <= 0) return 0;
  int r = 0;
  while (r < sv.size() && sv[r] / sv[0] >= rel_tol) ++r;
  return r;
}

std::vector<double> eval_all(const std::vector<Polynomial>& ps, const Eigen::VectorXd& x) {
  std::vector<double> xs(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) xs[static_cast<std::size_t>(i)] = x[i];
  std::vector<double> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.eval_double(xs));
  return out;
}

}  // namespace

ExtractionResult extract_minimizers(const Eigen::VectorXd& y, const MomentProblem& mp,
                                    const ExtractionConfig& cfg) {
  const int n = mp.nvars();
  const int j = mp.order;
  const auto full = monomial_basis(n, 2 * j);
  if (y.size() != static_cast<Eigen::Index>(full.size()))
    throw std::invalid_argument("extract_minimizers: moment vector length mismatch");
  const auto rows = monomial_basis(n, j);
  const int N = static_cast<int>(rows.size());

  ExtractionResult res;

  // Rank profile of the nested moment matrices.
  Eigen::MatrixXd M = moment_matrix(y, full, rows);
  for (int k = 0; k <= j; ++k) {
    const int s = static_cast<int>(basis_size(n, k));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M.topLeftCorner(s, s));
    res.ranks.push_back(numerical_rank(svd.singularValues(), cfg.rank_tol));
  }
  int d = 1;
  for (const auto& g : mp.effective_constraints()) d = std::max(d, half_degree(g));
  const int r = res.ranks.back();
  res.flat = j - d >= 0 && res.ranks[static_cast<std::size_t>(j - d)] == r;
  res.status = res.flat ? ExtractStatus::FLAT : ExtractStatus::NOT_FLAT;
  if (r == 0) {
    res.status = ExtractStatus::ILL_CONDITIONED;
    return res;
  }

  // Rank-r factor M ~ V V^T from the dominant singular pairs.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  Eigen::MatrixXd V = svd.matrixU().leftCols(r);
  for (int k = 0; k < r; ++k) V.col(k) *= std::sqrt(svd.singularValues()[k]);

  // Column echelon reduction; pivot rows name the monomial basis of the
  // quotient space. Rows are visited in graded order so pivots stay low.
  Eigen::MatrixXd W = V;
  const double piv_scale = W.cwiseAbs().maxCoeff();
  std::vector<int> pivot_rows;
  int col = 0;
  for (int row = 0; row < N && col < r; ++row) {
    int best = col;
    for (int k = col + 1; k < r; ++k)
      if (std::abs(W(row, k)) > std::abs(W(row, best))) best = k;
    if (std::abs(W(row, best)) <= cfg.pivot_tol * piv_scale) continue;
    W.col(col).swap(W.col(best));
    W.col(col) /= W(row, col);
    for (int k = 0; k < r; ++k) {
      if (k == col) continue;
      W.col(k) -= W(row, k) * W.col(col);
    }
    pivot_rows.push_back(row);
    ++col;
  }
  if (col < r) {
    res.status = ExtractStatus::ILL_CONDITIONED;
    return res;
  }

  // One multiplication operator per variable: the row of x_v * (pivot
  // monomial) expressed in the pivot basis.
  std::vector<Eigen::MatrixXd> ops(static_cast<std::size_t>(n), Eigen::MatrixXd(r, r));
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < r; ++k) {
      Monomial target = rows[static_cast<std::size_t>(pivot_rows[static_cast<std::size_t>(k)])];
      target.e[static_cast<std::size_t>(v)] += 1;
      int ti = basis_index(rows, target);
      if (ti < 0) {
        res.status = ExtractStatus::ILL_CONDITIONED;
        return res;
      }
      ops[static_cast<std::size_t>(v)].row(k) = W.row(ti);
    }
  }

  // Joint quasi-triangularization of a random convex combination; coordinates
  // come out as diagonal quadratic forms on the orthogonal columns.
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  Eigen::VectorXd mix(n);
  for (int v = 0; v < n; ++v) mix[v] = unif(rng);
  mix /= mix.sum();
  Eigen::MatrixXd Nmat = Eigen::MatrixXd::Zero(r, r);
  for (int v = 0; v < n; ++v) Nmat += mix[v] * ops[static_cast<std::size_t>(v)];
  Eigen::RealSchur<Eigen::MatrixXd> schur(Nmat);
  const Eigen::MatrixXd& Q = schur.matrixU();

  for (int k = 0; k < r; ++k) {
    Eigen::VectorXd x(n);
    for (int v = 0; v < n; ++v) x[v] = Q.col(k).dot(ops[static_cast<std::size_t>(v)] * Q.col(k));
    res.points.push_back(std::move(x));
  }

  // Atomic weights by least squares against the moment matrix, then the
  // reconstruction residual those weights achieve.
  Eigen::MatrixXd A(N * N, r);
  for (int k = 0; k < r; ++k) {
    Eigen::VectorXd vk(N);
    for (int b = 0; b < N; ++b) {
      double t = 1;
      const auto& e = rows[static_cast<std::size_t>(b)].e;
      for (int v = 0; v < n; ++v)
        for (int q = 0; q < e[static_cast<std::size_t>(v)]; ++q) t *= res.points[static_cast<std::size_t>(k)][v];
      vk[b] = t;
    }
    Eigen::MatrixXd outer = vk * vk.transpose();
    A.col(k) = Eigen::Map<Eigen::VectorXd>(outer.data(), N * N);
  }
  Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(M.data(), N * N);
  Eigen::VectorXd w = A.colPivHouseholderQr().solve(b);
  res.weights.assign(w.data(), w.data() + r);
  res.recon_error = (A * w - b).norm();

  const auto gs = mp.effective_constraints();
  for (const auto& x : res.points) {
    res.f_values.push_back(eval_all({mp.f}, x)[0]);
    if (gs.empty()) {
      res.g_mins.push_back(std::numeric_limits<double>::infinity());
    } else {
      auto vals = eval_all(gs, x);
      res.g_mins.push_back(*std::min_element(vals.begin(), vals.end()));
    }
  }
  return res;
}

ExtractionResult extract_minimizers(const MomentSequence& y, const MomentProblem& mp,
                                    const ExtractionConfig& cfg) {
  Eigen::VectorXd yd(static_cast<Eigen::Index>(y.size()));
  for (std::size_t a = 0; a < y.size(); ++a) yd[static_cast<Eigen::Index>(a)] = to_double(y.y[a]);
  return extract_minimizers(yd, mp, cfg);
}

CertifyReport certify_point(const Eigen::VectorXd& x, const MomentProblem& mp, double bound,
                            const ExtractionConfig& cfg) {
  if (x.size() != mp.nvars()) throw std::invalid_argument("certify_point: dimension mismatch");
  CertifyReport rep;
  rep.f_value = eval_all({mp.f}, x)[0];
  rep.g_values = eval_all(mp.effective_constraints(), x);
  rep.gap = rep.f_value - bound;
  rep.pass = rep.gap >= -cfg.feas_tol;
  for (double g : rep.g_values) rep.pass = rep.pass && g >= -cfg.feas_tol;
  return rep;
}

RankOneReport rank_one_equivalence_check(const Eigen::VectorXd& y, const MomentProblem& mp,
                                         FormulationKind kind, double solve_value, double tol,
                                         const ExtractionConfig& cfg) {
  RankOneReport rep;
  rep.solve_value = solve_value;
  ExtractionResult ex = extract_minimizers(y, mp, cfg);
  if (ex.status == ExtractStatus::ILL_CONDITIONED || ex.ranks.back() != 1) return rep;
  rep.rank_one = true;
  rep.point = ex.points[0];
  switch (kind) {
    case FormulationKind::PRIORITY_TRACE:
      rep.robust_value = robust_objective_eta(mp, rep.point);
      break;
    case FormulationKind::PRIORITY_PSD:
      rep.robust_value = robust_objective_eps(mp, rep.point);
      break;
    default:
      throw std::invalid_argument("rank_one_equivalence_check: unsupported formulation");
  }
  rep.discrepancy = std::abs(rep.robust_value - solve_value);
  rep.pass = rep.discrepancy <= tol * (1 + std::abs(solve_value));
  return rep;
}

}  // namespace momentsos
