#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "momentsos/build.hpp"
#include "momentsos/solver.hpp"

using namespace momentsos;

namespace {

Polynomial motzkin_like() {
  Polynomial f(2);
  f.add_term(Monomial({0, 0}), Rat(1, 27));
  f.add_term(Monomial({4, 2}), Rat(1));
  f.add_term(Monomial({2, 4}), Rat(1));
  f.add_term(Monomial({2, 2}), Rat(-1));
  return f;
}

// min y1 with [[y1, 1], [1, y2]] psd and y2 <= 10; optimum 1/10.
SdpInstance hyperbola_toy() {
  SdpInstance toy;
  toy.block_sizes = {2, -1};
  toy.c = {Rat(1), Rat(0)};
  toy.entries = {{1, 0, 0, 0, Rat(1)},
                 {2, 0, 1, 1, Rat(1)},
                 {0, 0, 0, 1, Rat(-1)},
                 {2, 1, 0, 0, Rat(-1)},
                 {0, 1, 0, 0, Rat(-10)}};
  toy.canonicalize();
  return toy;
}

MomentProblem square_problem() {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  return mp;
}

}  // namespace

TEST_CASE("one-variable bound constraint solves to its corner") {
  // min x subject to x >= 1, written as a single diagonal block.
  SdpInstance sdp;
  sdp.block_sizes = {-1};
  sdp.c = {Rat(1)};
  sdp.entries = {{1, 0, 0, 0, Rat(1)}, {0, 0, 0, 0, Rat(1)}};
  SolverResult res = solve_sdp(sdp);
  CHECK(res.status == SolveStatus::OPTIMAL);
  CHECK(res.x[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.primal_objective == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.dual_objective == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("moment relaxation of a shifted square finds its minimum and minimizer") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2) - Polynomial::variable(1, 0, 1) * Rat(2) +
         Polynomial::constant(1, Rat(1));  // (x - 1)^2
  mp.order = 1;
  NominalPair pair = build_nominal(mp);
  SolverResult res = solve_sdp(pair.primal);
  CHECK(res.status == SolveStatus::OPTIMAL);
  CHECK(std::abs(res.named_value) < 1e-6);

  auto y = pseudo_moments(pair.primal, res);
  REQUIRE(y.size() == 3);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(y[2] == doctest::Approx(1.0).epsilon(1e-5));

  // Dual certificate reproduces the data within solver accuracy.
  AchievedNoise an = achieved_noise_level(pair.primal, res);
  CHECK(an.eps < 1e-4);
  CHECK(an.eta < 1e-6);
}

TEST_CASE("frozen toy values for every penalized formulation") {
  MomentProblem mp = square_problem();

  SUBCASE("plain square has value zero on both sides") {
    NominalPair pair = build_nominal(mp);
    SolverResult res = solve_sdp(pair.dual);
    CHECK(res.status == SolveStatus::OPTIMAL);
    CHECK(std::abs(res.named_value) < 1e-6);
    CHECK(std::abs(res.primal_objective - res.dual_objective) < 1e-6);
  }

  SUBCASE("trace penalty on the free line prices the diagonal") {
    MomentProblem free_line;
    free_line.f = Polynomial(1);
    free_line.order = 1;
    free_line.noise.eta = Rat(1);
    SolverResult res = solve_sdp(build_priority_trace(free_line));
    CHECK(res.status == SolveStatus::OPTIMAL);
    CHECK(res.named_value == doctest::Approx(1.0).epsilon(1e-5));
  }

  SUBCASE("l1 penalty with unit radius") {
    mp.noise.eps = Rat(1);
    SolverResult res = solve_sdp(build_priority_psd(mp).primal_l1);
    CHECK(res.status == SolveStatus::OPTIMAL);
    CHECK(res.named_value == doctest::Approx(1.0).epsilon(1e-5));
  }

  SUBCASE("l1 penalty with half radius") {
    mp.noise.eps = Rat(1, 2);
    SolverResult res = solve_sdp(build_priority_psd(mp).primal_l1);
    CHECK(res.status == SolveStatus::OPTIMAL);
    CHECK(res.named_value == doctest::Approx(0.5).epsilon(1e-5));
  }

  SUBCASE("combined box and cone tolerances") {
    mp.noise.eps = Rat(1, 2);
    mp.noise.eta = Rat(1, 4);
    SdpInstance sdp = build_noise_dual(mp);
    SolverResult res = solve_sdp(sdp);
    CHECK(res.status == SolveStatus::OPTIMAL);
    CHECK(res.named_value == doctest::Approx(0.75).epsilon(1e-5));
    // named on the max side, penalized value on the min side: one solve,
    // both readings, equal at optimality
    CHECK(std::abs(res.primal_objective - res.dual_objective) < 1e-6);

    AchievedNoise an = achieved_noise_level(sdp, res);
    CHECK(an.eps <= 0.5 + 1e-5);
    CHECK(an.eta <= 0.25 + 1e-5);
  }
}

TEST_CASE("conic toy with an l1 penalty matches the corner scan") {
  SdpInstance toy = hyperbola_toy();
  SolverResult base = solve_sdp(toy);
  CHECK(base.status == SolveStatus::OPTIMAL);
  CHECK(base.named_value == doctest::Approx(0.1).epsilon(1e-5));

  SdpInstance rob = build_canonical_robust(toy, Rat(1, 100));
  SolverResult res = solve_sdp(rob);
  CHECK(res.status == SolveStatus::OPTIMAL);
  CHECK(res.named_value == doctest::Approx(0.201).epsilon(1e-5));

  // Every sign corner of the objective box stays below the penalized value.
  double worst = -1e30;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      SdpInstance corner = with_objective(
          toy, {Rat(1) + Rat(s1, 100), Rat(0) + Rat(s2, 100)});
      SolverResult cr = solve_sdp(corner);
      REQUIRE(cr.status == SolveStatus::OPTIMAL);
      worst = std::max(worst, cr.named_value);
    }
  }
  CHECK(worst <= res.named_value + 1e-5);
  CHECK(worst == doctest::Approx(res.named_value).epsilon(1e-4));
}

TEST_CASE("unbounded direction is reported against the other side") {
  // min -x subject to x >= 0: dives to -infinity.
  SdpInstance sdp;
  sdp.block_sizes = {-1};
  sdp.c = {Rat(-1)};
  sdp.entries = {{1, 0, 0, 0, Rat(1)}};
  SolverResult res = solve_sdp(sdp);
  CHECK(res.status == SolveStatus::DUAL_INFEASIBLE_SUSPECTED);
  CHECK(res.primal_objective < -1e5);
}

TEST_CASE("empty feasible set is reported through the diverging max side") {
  // x >= 1 and -x >= 0 cannot hold together.
  SdpInstance sdp;
  sdp.block_sizes = {-2};
  sdp.c = {Rat(1)};
  sdp.entries = {{1, 0, 0, 0, Rat(1)}, {0, 0, 0, 0, Rat(1)}, {1, 0, 1, 1, Rat(-1)}};
  SolverResult res = solve_sdp(sdp);
  CHECK(res.status == SolveStatus::PRIMAL_INFEASIBLE_SUSPECTED);
  CHECK(res.dual_objective > 1e5);
}

TEST_CASE("relaxation without a ball constraint dives for the sextic") {
  MomentProblem mp;
  mp.f = motzkin_like();
  mp.order = 3;
  SolverConfig cfg;
  cfg.epsilon_star = 1e-11;
  SolverResult res = solve_sdp(build_nominal(mp).primal, cfg);
  bool diverged = res.status == SolveStatus::DUAL_INFEASIBLE_SUSPECTED ||
                  res.named_value < -1e3;
  CHECK(diverged);
}

TEST_CASE("serial and threaded coefficient assembly agree bit for bit") {
  MomentProblem mp = square_problem();
  mp.noise.eps = Rat(1, 2);
  mp.noise.eta = Rat(1, 4);
  CompiledSdp p = compile_sdp(build_noise_dual(mp));

  std::mt19937 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BlockMatrix X = BlockMatrix::identity(p.sizes, 1.0);
  BlockMatrix Y = BlockMatrix::identity(p.sizes, 1.0);
  for (int b = 0; b < X.num_blocks(); ++b) {
    auto& xb = X.blocks[static_cast<std::size_t>(b)];
    auto& yb = Y.blocks[static_cast<std::size_t>(b)];
    if (X.is_diag(b)) {
      for (Eigen::Index i = 0; i < xb.rows(); ++i) {
        xb(i, 0) = 1.0 + std::abs(gauss(rng));
        yb(i, 0) = 1.0 + std::abs(gauss(rng));
      }
    } else {
      Eigen::MatrixXd a(xb.rows(), xb.cols());
      for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = gauss(rng);
      xb = a * a.transpose() + Eigen::MatrixXd::Identity(a.rows(), a.rows());
      for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = gauss(rng);
      yb = a * a.transpose() + Eigen::MatrixXd::Identity(a.rows(), a.rows());
    }
  }
  BlockFactor xf = factorize_psd(X);
  REQUIRE(xf.ok);
  Eigen::MatrixXd gs = schur_serial(p, xf, Y);
  Eigen::MatrixXd gp = schur_parallel(p, xf, Y);
  CHECK((gs.array() == gp.array()).all());
}

TEST_CASE("repeated solves are bitwise identical") {
  MomentProblem mp = square_problem();
  mp.noise.eps = Rat(1, 2);
  mp.noise.eta = Rat(1, 4);
  SdpInstance sdp = build_noise_dual(mp);
  SolverResult a = solve_sdp(sdp);
  SolverResult b = solve_sdp(sdp);
  CHECK(a.iterations == b.iterations);
  CHECK(a.named_value == b.named_value);
  CHECK((a.x.array() == b.x.array()).all());
}

TEST_CASE("iteration history records a shrinking barrier parameter") {
  SolverResult res = solve_sdp(build_nominal(square_problem()).primal);
  REQUIRE(!res.history.empty());
  CHECK(res.history.back().mu < res.history.front().mu);
  CHECK(res.iterations < 200);
  CHECK(res.history.front().err_p > res.history.back().err_p);
}

TEST_CASE("constant instance with no scalar variables is optimal at zero") {
  SdpInstance sdp;
  sdp.block_sizes = {-1};
  sdp.entries = {{0, 0, 0, 0, Rat(-1)}};  // slack fixed at +1
  SolverResult res = solve_sdp(sdp);
  CHECK(res.status == SolveStatus::OPTIMAL);
  CHECK(std::abs(res.named_value) < 1e-6);
}
