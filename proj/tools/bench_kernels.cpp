// Times the Schur-complement assembly kernels (serial reference vs the
// OpenMP per-column version) on realistic relaxation instances and checks
// that both produce bit-identical matrices.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "momentsos/build.hpp"
#include "momentsos/problem_io.hpp"
#include "momentsos/schur.hpp"

using namespace momentsos;
using Clock = std::chrono::steady_clock;

namespace {

BlockMatrix random_spd(const std::vector<int>& sizes, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BlockMatrix a = BlockMatrix::zero(sizes);
  for (int b = 0; b < a.num_blocks(); ++b) {
    int s = a.side(b);
    if (a.is_diag(b)) {
      for (int i = 0; i < s; ++i) a.blocks[b](i, 0) = 1.0 + 0.5 * std::abs(u(rng));
    } else {
      // L L^T with unit-diagonal lower-triangular L stays positive definite
      // at every size.
      Eigen::MatrixXd l = Eigen::MatrixXd::Identity(s, s);
      for (int i = 1; i < s; ++i)
        for (int j = 0; j < i; ++j) l(i, j) = 0.2 * u(rng) / std::sqrt(double(s));
      a.blocks[b] = l * l.transpose();
    }
  }
  return a;
}

double time_ms(const std::function<Eigen::MatrixXd()>& fn, int reps,
               Eigen::MatrixXd& out) {
  out = fn();  // warm up and keep a result for the comparison
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) out = fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  if (reps < 1) reps = 1;

#ifdef _OPENMP
  std::printf("threads: %d, reps per kernel: %d\n", omp_get_max_threads(), reps);
#else
  std::printf("threads: 1 (built without OpenMP), reps per kernel: %d\n", reps);
#endif
  std::printf("%-28s %6s %10s %12s %12s %9s %10s\n", "instance", "m", "blocks",
              "serial[ms]", "parallel[ms]", "speedup", "max|dG|");

  struct Case {
    std::string name;
    SdpInstance sdp;
  };
  std::vector<Case> cases;
  for (int j : {5, 6, 7, 8}) {
    MomentProblem mp = builtin_problem("motzkin");
    mp.order = j;
    cases.push_back({"motzkin-nominal-j" + std::to_string(j),
                     build_nominal(mp).primal});
  }
  {
    MomentProblem mp = builtin_problem("motzkin");
    mp.noise.eps = Rat(1, 100000000);
    cases.push_back({"motzkin-priority-psd-j8", build_priority_psd(mp).primal_l1});
  }

  bool all_equal = true;
  for (const auto& c : cases) {
    CompiledSdp p = compile_sdp(c.sdp);
    BlockMatrix x = random_spd(p.sizes, 7);
    BlockMatrix y = random_spd(p.sizes, 11);
    BlockFactor xf = factorize_psd(x);
    if (!xf.ok) {
      std::fprintf(stderr, "%s: test matrix not positive definite\n", c.name.c_str());
      return 1;
    }

    Eigen::MatrixXd gs, gp;
    double ts = time_ms([&] { return schur_serial(p, xf, y); }, reps, gs);
    double tp = time_ms([&] { return schur_parallel(p, xf, y); }, reps, gp);
    double diff = (gs - gp).cwiseAbs().maxCoeff();
    if (diff != 0.0) all_equal = false;

    std::string blocks;
    for (int s : p.sizes) blocks += (blocks.empty() ? "" : ",") + std::to_string(s);
    std::printf("%-28s %6d %10s %12.2f %12.2f %8.2fx %10.3g\n", c.name.c_str(), p.m,
                blocks.c_str(), ts, tp, ts / tp, diff);
  }

  if (!all_equal) {
    std::fprintf(stderr, "kernel outputs differ; the parallel path is broken\n");
    return 1;
  }
  return 0;
}
