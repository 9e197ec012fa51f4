#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "momentsos/build.hpp"
#include "momentsos/localizing.hpp"
#include "momentsos/moment_problem.hpp"
#include "momentsos/perturb.hpp"
#include "momentsos/sdpa_io.hpp"

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

// Looks up one mirrored entry of an instance's constraint data.
Rat entry_at(const SdpInstance& sdp, int mat, int block, int row, int col) {
  if (row > col) std::swap(row, col);
  for (const auto& e : sdp.entries) {
    if (e.mat == mat && e.block == block && e.row == row && e.col == col) return e.value;
  }
  return Rat(0);
}

bool same_numbers(const SdpInstance& a, const SdpInstance& b) {
  SdpInstance probe = a;
  probe.kind = b.kind;
  probe.side = b.side;
  probe.eps = b.eps;
  probe.eta = b.eta;
  return probe.same_data(b);
}

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rat r(num(rng), den(rng));
  r.canonicalize();  // two-argument mpq construction skips gcd reduction
  return r;
}

Polynomial random_poly(std::mt19937& rng, int nvars, int maxdeg) {
  auto basis = monomial_basis(nvars, maxdeg);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  Polynomial p(nvars);
  int terms = count(rng);
  for (int t = 0; t < terms; ++t) p.add_term(basis[pick(rng)], random_rat(rng));
  if (p.is_zero()) p.add_term(Monomial::zero(nvars), Rat(1));
  return p;
}

}  // namespace

TEST_CASE("moment matrix of a univariate sequence is the Hankel matrix") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  LocalizingSystem sys = localizing_system(mp);
  REQUIRE(sys.blocks.size() == 1);
  CHECK(sys.blocks[0].side == 2);
  CHECK(sys.monomial_count() == 3);

  std::vector<Rat> y = {Rat(1), Rat(2), Rat(5)};
  auto M = assemble_localizing(sys.blocks[0], y);
  CHECK(M[0] == 1);
  CHECK(M[1] == 2);
  CHECK(M[2] == 2);
  CHECK(M[3] == 5);
}

TEST_CASE("localizing block of 1 - x^2 shifts moments by two") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  Polynomial g = Polynomial::constant(1, Rat(1)) - Polynomial::variable(1, 0, 2);
  mp.gs = {g};
  mp.order = 2;
  LocalizingSystem sys = localizing_system(mp);
  REQUIRE(sys.blocks.size() == 2);
  CHECK(sys.blocks[1].half_deg == 1);
  CHECK(sys.blocks[1].side == 2);

  // Entry (b, c) must be y_{b+c} - y_{b+c+2}.
  std::vector<Rat> y = {Rat(1), Rat(2), Rat(5), Rat(14), Rat(42)};
  auto M = assemble_localizing(sys.blocks[1], y);
  CHECK(M[0] == Rat(1) - Rat(5));
  CHECK(M[1] == Rat(2) - Rat(14));
  CHECK(M[2] == Rat(2) - Rat(14));
  CHECK(M[3] == Rat(5) - Rat(42));

  MomentSequence ms = MomentSequence::zero(1, 2);
  ms.y = y;
  CHECK(localizing_brute_force(g, 2, ms) == M);
}

TEST_CASE("assembled blocks match the entrywise Riesz oracle on random data") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> pick_n(1, 2);
  std::uniform_int_distribution<int> pick_j(1, 4);
  std::uniform_int_distribution<int> pick_m(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int trial = 0; trial < 100; ++trial) {
    MomentProblem mp;
    int n = pick_n(rng);
    mp.order = pick_j(rng);
    mp.f = random_poly(rng, n, 2 * mp.order);
    int m = pick_m(rng);
    for (int l = 0; l < m; ++l) {
      int maxdeg = std::min(2 * mp.order, coin(rng) ? 2 : 4);
      mp.gs.push_back(random_poly(rng, n, maxdeg));
    }
    if (coin(rng)) mp.ball_N = Rat(4);

    LocalizingSystem sys = localizing_system(mp);
    MomentSequence ms = MomentSequence::zero(n, mp.order);
    for (auto& v : ms.y) v = random_rat(rng);

    for (const auto& blk : sys.blocks) {
      auto fast = assemble_localizing(blk, ms.y);
      auto slow = localizing_brute_force(blk.g, mp.order, ms);
      CHECK(fast == slow);

      // trace identity used by the penalized objectives
      Rat tr(0);
      for (int r = 0; r < blk.side; ++r) {
        tr += fast[static_cast<std::size_t>(r) * static_cast<std::size_t>(blk.side) +
                   static_cast<std::size_t>(r)];
      }
      Rat via_coeffs(0);
      for (std::size_t a = 0; a < sys.basis2j.size(); ++a) {
        via_coeffs += blk.trace_coefficient(static_cast<int>(a)) * ms.y[a];
      }
      CHECK(tr == via_coeffs);
    }
  }
}

TEST_CASE("block layout: identity first, ball constraint last") {
  MomentProblem mp;
  mp.f = motzkin_like();
  mp.gs = {Polynomial::variable(2, 0, 1)};
  mp.order = 3;
  mp.ball_N = Rat(2);
  LocalizingSystem sys = localizing_system(mp);
  REQUIRE(sys.blocks.size() == 3);
  CHECK(sys.blocks[0].g == Polynomial::constant(2, Rat(1)));
  CHECK(sys.blocks[0].half_deg == 0);
  CHECK(sys.blocks[0].side == basis_size(2, 3));

  Polynomial ball = Polynomial::constant(2, Rat(2)) - Polynomial::variable(2, 0, 2) -
                    Polynomial::variable(2, 1, 2);
  CHECK(sys.blocks[2].g == ball);
  CHECK(sys.blocks[2].half_deg == 1);
}

TEST_CASE("trace penalty polynomial equals the even-square perturbation") {
  MomentProblem mp1;
  mp1.f = Polynomial::variable(1, 0, 2);
  mp1.gs = {Polynomial::constant(1, Rat(1)) - Polynomial::variable(1, 0, 2)};
  mp1.order = 2;
  LocalizingSystem s1 = localizing_system(mp1);
  CHECK(trace_penalty_polynomial(s1, Rat(1)) ==
        even_square_perturbation(Polynomial(1), mp1.effective_constraints(), 2, Rat(1)));

  MomentProblem mp2;
  mp2.f = motzkin_like();
  mp2.order = 3;
  mp2.ball_N = Rat(2);
  LocalizingSystem s2 = localizing_system(mp2);
  CHECK(trace_penalty_polynomial(s2, Rat(1, 7)) ==
        even_square_perturbation(Polynomial(2), mp2.effective_constraints(), 3, Rat(1, 7)));
}

TEST_CASE("problem validation rejects malformed inputs") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 0;
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);

  mp.order = 1;
  CHECK_NOTHROW(mp.validate());
  mp.f = Polynomial::variable(1, 0, 4);
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);  // degree over 2*order

  mp.f = Polynomial::variable(1, 0, 2);
  mp.gs = {Polynomial(1)};
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);  // zero constraint

  mp.gs.clear();
  mp.noise.eps = Rat(-1, 2);
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);
}

TEST_CASE("dirac and atomic sequences produce exact moments") {
  MomentSequence d = MomentSequence::dirac({Rat(2)}, 2);
  CHECK(d.y == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8), Rat(16)});
  CHECK(d.normalized());
  CHECK(d.riesz(Polynomial::variable(1, 0, 2)) == 4);
  CHECK(MomentSequence::dirac({Rat(-2)}, 2).l1_norm() == 31);

  MomentSequence d2 = MomentSequence::dirac({Rat(1, 2), Rat(-1, 3)}, 1);
  CHECK(d2.y == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(-1, 3), Rat(1, 4), Rat(-1, 6), Rat(1, 9)});

  MomentSequence a = MomentSequence::atomic({{Rat(1)}, {Rat(3)}}, {Rat(1, 2), Rat(1, 2)}, 1);
  CHECK(a.y == std::vector<Rat>{Rat(1), Rat(2), Rat(5)});

  CHECK_THROWS(d.riesz(Polynomial::variable(1, 0, 5)));
  CHECK_THROWS(d.riesz(Polynomial::variable(2, 0, 1)));
}

TEST_CASE("perturbed objective evaluates as base plus eps times the moment l1 norm") {
  // On sequences with nonnegative entries the orthant perturbation adds
  // exactly eps * sum_a y_a, which is then the l1 norm.
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(0, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> pick_j(1, 4);
  auto frac = [&](int a, int b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
  };
  for (int trial = 0; trial < 100; ++trial) {
    int j = pick_j(rng);
    Polynomial f = random_poly(rng, 1, 2 * j);
    Rat eps = frac(num(rng), den(rng));
    MomentSequence ms = MomentSequence::zero(1, j);
    for (auto& v : ms.y) v = frac(num(rng), den(rng));
    CHECK(ms.riesz(l1_perturbation_orthant(f, j, eps)) == ms.riesz(f) + eps * ms.l1_norm());
  }
}

TEST_CASE("unperturbed builder encodes min y2 against the 2x2 moment matrix") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  NominalPair pair = build_nominal(mp);

  CHECK(pair.primal.kind == FormulationKind::NOMINAL_PRIMAL);
  CHECK(pair.primal.side == FormSide::PRIMAL);
  CHECK(pair.dual.kind == FormulationKind::NOMINAL_DUAL);
  CHECK(pair.dual.side == FormSide::DUAL);
  CHECK(same_numbers(pair.primal, pair.dual));

  CHECK(pair.primal.num_vars() == 2);
  CHECK(pair.primal.block_sizes == std::vector<int>{2});
  CHECK(pair.primal.c == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(pair.primal.offset == 0);

  // sum_a F_a y_a - F_0 with F_0 = -C_0: the constant matrix pins y_0 = 1.
  CHECK(entry_at(pair.primal, 0, 0, 0, 0) == -1);
  CHECK(entry_at(pair.primal, 1, 0, 0, 1) == 1);
  CHECK(entry_at(pair.primal, 2, 0, 1, 1) == 1);
  CHECK(pair.primal.entries.size() == 3);

  REQUIRE(pair.primal.meta.has_value());
  CHECK(pair.primal.meta->y_count == 2);
  CHECK(pair.primal.meta->u_count == 0);
  CHECK(pair.primal.meta->f_alpha == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("box-noise builder adds the trace penalty, split block, and offset") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eps = Rat(1, 2);
  mp.noise.eta = Rat(1, 4);
  SdpInstance sdp = build_noise_dual(mp);

  CHECK(sdp.kind == FormulationKind::NOISE_DUAL);
  CHECK(sdp.side == FormSide::DUAL);
  CHECK(sdp.eps == Rat(1, 2));
  CHECK(sdp.eta == Rat(1, 4));

  // Objective: f + eta * (trace of the moment block), then the split radii.
  CHECK(sdp.c == std::vector<Rat>{Rat(0), Rat(5, 4), Rat(1, 2), Rat(1, 2)});
  // Constant part f_0 + eta * tr C_0 + eps|y_0|: 0 + 1/4 + 1/2.
  CHECK(sdp.offset == Rat(3, 4));
  CHECK(sdp.block_sizes == std::vector<int>{2, -4});

  // Rows u_a - y_a >= 0 and u_a + y_a >= 0 for a = 1, 2.
  CHECK(entry_at(sdp, 1, 1, 0, 0) == -1);
  CHECK(entry_at(sdp, 3, 1, 0, 0) == 1);
  CHECK(entry_at(sdp, 1, 1, 1, 1) == 1);
  CHECK(entry_at(sdp, 3, 1, 1, 1) == 1);
  CHECK(entry_at(sdp, 2, 1, 2, 2) == -1);
  CHECK(entry_at(sdp, 4, 1, 2, 2) == 1);
  CHECK(entry_at(sdp, 2, 1, 3, 3) == 1);
  CHECK(entry_at(sdp, 4, 1, 3, 3) == 1);
  REQUIRE(sdp.meta.has_value());
  CHECK(sdp.meta->u_count == 2);
}

TEST_CASE("box noise with eps = 0 degenerates to the trace-penalized data") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eta = Rat(1, 4);
  SdpInstance noise = build_noise_dual(mp);
  SdpInstance trace = build_priority_trace(mp);
  CHECK(noise.block_sizes == std::vector<int>{2});
  CHECK(same_numbers(noise, trace));
  CHECK(trace.side == FormSide::PRIMAL);
}

TEST_CASE("trace-penalized objective of the free line counts diagonal monomials") {
  // f = 0, one moment block [[y0, y1], [y1, y2]]: penalty eta*(y0 + y2).
  MomentProblem mp;
  mp.f = Polynomial(1);
  mp.order = 1;
  mp.noise.eta = Rat(1);
  SdpInstance sdp = build_priority_trace(mp);
  CHECK(sdp.c == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(sdp.offset == 1);
  CHECK(sdp.eta == 1);
}

TEST_CASE("l1-penalized builder prices every pseudo-moment radius") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eps = Rat(1);
  PsdPair pair = build_priority_psd(mp);

  CHECK(pair.primal_l1.side == FormSide::PRIMAL);
  CHECK(pair.dual_box.side == FormSide::DUAL);
  CHECK(same_numbers(pair.primal_l1, pair.dual_box));
  CHECK(pair.primal_l1.c == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(1)});
  CHECK(pair.primal_l1.offset == 1);  // |y_0| = 1 pays its radius up front
  CHECK(pair.primal_l1.block_sizes == std::vector<int>{2, -4});
  CHECK(pair.primal_l1.eps == 1);

  mp.noise.eps = Rat(1, 2);
  CHECK(build_priority_psd(mp).primal_l1.offset == Rat(1, 2));
}

TEST_CASE("per-monomial radii override the uniform eps") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eps_by_alpha = {Rat(1, 8), Rat(1, 16), Rat(1, 32)};
  PsdPair pair = build_priority_psd(mp);
  CHECK(pair.primal_l1.offset == Rat(1, 8));
  CHECK(pair.primal_l1.c == std::vector<Rat>{Rat(0), Rat(1), Rat(1, 16), Rat(1, 32)});

  mp.noise.eps_by_alpha = {Rat(1, 8)};  // too short for the basis
  CHECK_THROWS_AS(build_priority_psd(mp), std::invalid_argument);
}

TEST_CASE("degree-16 relaxation of the two-variable sextic has the expected shape") {
  MomentProblem mp;
  mp.f = motzkin_like();
  mp.order = 8;
  NominalPair pair = build_nominal(mp);
  CHECK(pair.primal.num_vars() == 152);
  CHECK(pair.primal.block_sizes == std::vector<int>{45});

  mp.noise.eps = rat_of_double(1e-8);
  PsdPair psd = build_priority_psd(mp);
  CHECK(psd.primal_l1.num_vars() == 304);
  CHECK(psd.primal_l1.block_sizes == std::vector<int>{45, -304});
  // constant term of f plus the radius of |y_0| = 1
  CHECK(psd.primal_l1.offset == Rat(1, 27) + rat_of_double(1e-8));
}

TEST_CASE("l1 penalization of a generic conic instance splits its variables") {
  // min y1 with [[y1, 1], [1, y2]] psd and y2 <= 10.
  SdpInstance toy;
  toy.block_sizes = {2, -1};
  toy.c = {Rat(1), Rat(0)};
  toy.entries = {{1, 0, 0, 0, Rat(1)},
                 {2, 0, 1, 1, Rat(1)},
                 {0, 0, 0, 1, Rat(-1)},
                 {2, 1, 0, 0, Rat(-1)},
                 {0, 1, 0, 0, Rat(-10)}};
  toy.canonicalize();
  toy.validate();

  SdpInstance rob = build_canonical_robust(toy, Rat(1, 100));
  CHECK(rob.kind == FormulationKind::CANONICAL_ROBUST);
  CHECK(rob.side == FormSide::PRIMAL);
  CHECK(rob.eps == Rat(1, 100));
  CHECK(rob.c == std::vector<Rat>{Rat(1), Rat(0), Rat(1, 100), Rat(1, 100)});
  CHECK(rob.block_sizes == std::vector<int>{2, -1, -4});
  CHECK(rob.offset == 0);

  // Original data is untouched, split rows appended.
  CHECK(entry_at(rob, 0, 0, 0, 1) == -1);
  CHECK(entry_at(rob, 2, 1, 0, 0) == -1);
  CHECK(entry_at(rob, 1, 2, 0, 0) == -1);
  CHECK(entry_at(rob, 3, 2, 0, 0) == 1);
  CHECK(entry_at(rob, 2, 2, 2, 2) == -1);
  CHECK(entry_at(rob, 4, 2, 3, 3) == 1);

  SdpInstance corner = with_objective(rob, {Rat(101, 100), Rat(1, 100), Rat(0), Rat(0)});
  CHECK(corner.c[0] == Rat(101, 100));
  CHECK(corner.entries.size() == rob.entries.size());
  CHECK_THROWS_AS(with_objective(rob, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("structural validation catches malformed instances") {
  SdpInstance sdp;
  sdp.block_sizes = {2};
  sdp.c = {Rat(1)};
  sdp.entries = {{1, 0, 0, 0, Rat(1)}};
  CHECK_NOTHROW(sdp.validate());

  SdpInstance bad = sdp;
  bad.entries[0].mat = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = sdp;
  bad.entries[0].block = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = sdp;
  bad.entries[0].row = 1;  // row > col
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = sdp;
  bad.block_sizes = {-2};
  bad.entries = {{1, 0, 0, 1, Rat(1)}};  // off-diagonal in a diagonal block
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = sdp;
  bad.block_sizes = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("canonicalize merges duplicates and drops zeros deterministically") {
  SdpInstance sdp;
  sdp.block_sizes = {2};
  sdp.c = {Rat(1)};
  sdp.entries = {{1, 0, 0, 1, Rat(2)},
                 {1, 0, 0, 0, Rat(1)},
                 {1, 0, 0, 1, Rat(-2)},
                 {0, 0, 1, 1, Rat(3)}};
  sdp.canonicalize();
  REQUIRE(sdp.entries.size() == 2);
  CHECK(sdp.entries[0].mat == 0);
  CHECK(sdp.entries[1].mat == 1);
  CHECK(sdp.entries[1].row == 0);
  CHECK(sdp.entries[1].col == 0);
  auto again = sdp;
  again.canonicalize();
  CHECK(sdp.same_data(again));
}

TEST_CASE("formulation tags round-trip kind and parameters") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eps = rat_of_double(1e-8);
  mp.noise.eta = Rat(1, 4);
  SdpInstance sdp = build_noise_dual(mp);
  ParsedTag tag = parse_formulation_tag(formulation_tag(sdp));
  CHECK(tag.kind == FormulationKind::NOISE_DUAL);
  CHECK(tag.eps == sdp.eps);
  CHECK(tag.eta == sdp.eta);

  CHECK(formulation_tag(build_nominal(mp).dual) == "NOMINAL_DUAL");
  CHECK(parse_formulation_tag("PRIORITY_TRACE(0.25)").eta == Rat(1, 4));
  CHECK(parse_formulation_tag("PRIORITY_PSD(0.5)").eps == Rat(1, 2));
  CHECK_THROWS(parse_formulation_tag("SOMETHING_ELSE"));
  CHECK_THROWS(parse_formulation_tag("NOISE_DUAL(0.5"));
  CHECK_THROWS(parse_formulation_tag("NOISE_DUAL(0.5)"));
}

TEST_CASE("sparse text export imports back to the same data") {
  MomentProblem mp;
  mp.f = Polynomial::variable(1, 0, 2);
  mp.order = 1;
  mp.noise.eps = Rat(1, 2);
  mp.noise.eta = Rat(1, 4);
  SdpInstance sdp = build_noise_dual(mp);

  std::string text = export_sdpa_text(sdp);
  SdpInstance back = import_sdpa_text(text);
  CHECK(back.same_data(sdp));          // all values here are dyadic
  CHECK(export_sdpa_text(back) == text);
}

TEST_CASE("re-export is byte-identical even for non-dyadic coefficients") {
  MomentProblem mp;
  mp.f = motzkin_like();  // constant term 1/27 is not a double
  mp.order = 4;
  SdpInstance sdp = build_nominal(mp).primal;
  std::string text = export_sdpa_text(sdp);
  CHECK(export_sdpa_text(import_sdpa_text(text)) == text);

  // Building twice yields identical bytes.
  CHECK(export_sdpa_text(build_nominal(mp).primal) == text);
}

TEST_CASE("import reports malformed files with line numbers") {
  const std::string good =
      "*FORMULATION NOMINAL_PRIMAL\n"
      "*SIDE PRIMAL\n"
      "*OFFSET 0\n"
      "2\n"
      "2\n"
      "2 -1\n"
      "0 1\n"
      "1 1 1 2 1\n"
      "2 2 1 1 -1\n";
  CHECK_NOTHROW(import_sdpa_text(good));

  auto expect_throw = [](const std::string& text, const char* needle) {
    try {
      import_sdpa_text(text);
      FAIL_CHECK("expected a parse error containing '" << needle << "'");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_throw("*SIDE SIDEWAYS\n2\n1\n2\n0 1\n", "unknown side");
  expect_throw("2\n1\n2 2\n0 1\n", "1 block sizes");
  expect_throw("2\n1\n2\n0\n", "2 objective values");
  expect_throw("2\n1\n2\n0 1\n1 1 2 1 5\n", "below the diagonal");
  expect_throw("2\n1\n2\n0 1\n1 1 1 2 5 9\n", "trailing token");
  expect_throw("2\n1\n2\n0 1\n1 1 1 x 5\n", "expected 'matno blockno i j value'");
  expect_throw("2\n1\n2\n0 zz\n", "bad numeric value");
  expect_throw("2\n1\n2\n", "header incomplete");
  expect_throw("2\n1\n2\n0 1\n1 1 1 2 5\n1 1 1 2 4\n", "duplicate");
  expect_throw("2\n1\n2\n0 1\n1 2 1 1 5\n", "block index");
  expect_throw("2\n1\n-2\n0 1\n1 1 1 2 5\n", "off-diagonal");
}
