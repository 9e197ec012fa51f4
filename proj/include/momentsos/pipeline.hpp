#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "momentsos/extract.hpp"
#include "momentsos/problem_io.hpp"
#include "momentsos/robust.hpp"
#include "momentsos/solver.hpp"

namespace momentsos {

/// Everything needed to reproduce one run: problem selection, formulation,
/// parameter overrides, and solver/extraction settings. Echoed verbatim as
/// the first record of every report so runs can be replayed.
struct RunManifest {
  std::string problem = "motzkin";  // builtin name or problem-file path
  std::string formulation = "nominal-primal";
  std::optional<int> order;  // overrides the problem's relaxation order
  std::optional<Rat> eps;    // overrides noise.epsilon
  std::optional<Rat> eta;    // overrides noise.eta
  Rat gamma{0};              // parameter of the builtin problem families
  bool with_extraction = true;
  bool with_game = false;  // adversarial re-solve verification (extra solves)
  SolverConfig solver;
  ExtractionConfig extraction;
  std::string out;  // relax: exchange-file path ("" derives one from the run)
};

/// --formulation flag values: nominal-primal, nominal-dual, noise-dual,
/// priority-trace, priority-psd, canonical-robust.
FormulationKind formulation_from_flag(const std::string& flag);
std::string formulation_flag(FormulationKind kind);

/// Loads the builtin or file problem named by the manifest and applies the
/// order and noise overrides.
MomentProblem resolve_problem(const RunManifest& m);

/// Builds the instance selected by the formulation tag. For priority-psd this
/// is the l1 side, whose scalars carry the moment solution; the box side's
/// bound is still reported, since both sides of one dataset are solved
/// together.
SdpInstance instance_for(const MomentProblem& mp, FormulationKind kind);

/// The manifest's one-line JSON echo, and its inverse. Reports start with
/// this record; feeding it back reproduces the run bit for bit (timing fields
/// aside).
std::string manifest_record(const RunManifest& m);
RunManifest manifest_from_record(const std::string& json_line);

/// Assembles the selected relaxation and writes its exchange file. Emits
/// manifest and relax records on `report` (one JSON object per line) and
/// returns the path written.
std::string cmd_relax(const RunManifest& m, std::ostream& report);

/// Full pipeline: assemble, solve, then on moment-backed instances read the
/// pseudo-moments, extract candidate minimizers, and certify the best one
/// against the reported bound. Penalized formulations additionally get an
/// achieved-noise record, a rank-one consistency check, and (when with_game)
/// an adversarial verification record. One JSON record per stage; failures
/// raise std::runtime_error prefixed with the stage name.
void cmd_solve(const RunManifest& m, std::ostream& report);

/// Canned experiment bundles. "motzkin": nominal divergence at orders 3 and
/// 8, the l1-penalized order-8 run with bound and support extraction, and the
/// even-square-perturbed order-8 certificate plus refined extraction pass.
/// "univariate": exact root isolation of the l1-perturbed double well over
/// gamma in {0, 1e-3} x eps in {1e-7, 1e-30}, then double-precision nominal
/// solves at orders 2..5 with extraction for comparison. Sub-run records
/// carry a "run" label; `base` supplies defaults for seeds and tolerances
/// that the bundle does not pin.
void cmd_reproduce(const std::string& name, const RunManifest& base,
                   std::ostream& report);

}  // namespace momentsos
