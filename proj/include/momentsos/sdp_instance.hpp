#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "momentsos/localizing.hpp"
#include "momentsos/rational.hpp"

namespace momentsos {

/// Which optimization problem an instance's data encodes.
enum class FormulationKind {
  NOMINAL_PRIMAL,    // moment relaxation, value on the min side
  NOMINAL_DUAL,      // same data, sum-of-squares value on the max side
  NOISE_DUAL,        // box-perturbed equalities + shifted cones (eps, eta)
  PRIORITY_TRACE,    // trace-penalized moment relaxation (eta only)
  PRIORITY_PSD,      // l1-penalized moment relaxation (eps only)
  CANONICAL_ROBUST,  // l1-penalized generic conic program (eps)
};

/// The side of the encoded primal-dual pair that carries the named value.
enum class FormSide { PRIMAL, DUAL };

std::string kind_name(FormulationKind k);
std::string side_name(FormSide s);

/// One coefficient of a constraint matrix: mat 0 is the constant matrix, mats
/// 1..num_vars pair with the scalar variables. row <= col always; the entry is
/// mirrored across the diagonal. Diagonal blocks only hold row == col.
struct SparseEntry {
  int mat = 0;
  int block = 0;
  int row = 0;
  int col = 0;
  Rat value;
};

/// Link back to the generating moment problem, kept so solver output can be
/// mapped to pseudo-moments, certificates, and achieved-noise reports.
struct MomentMeta {
  std::shared_ptr<const LocalizingSystem> system;
  std::vector<Rat> f_alpha;  // objective coefficients over the degree-2j basis
  int y_count = 0;           // scalar variables carrying y (basis size - 1)
  int u_count = 0;           // l1 split variables (0 or y_count)
};

/// Block-diagonal conic program in standard exchange form. The data encodes
/// the pair
///   min side:  minimize c.x  with  sum_i F_i x_i - F_0  in the cone,
///   max side:  maximize <F_0, Y>  with  <F_i, Y> = c_i,  Y in the cone;
/// `side` says which one carries the formulation's named value, and the named
/// value equals that side's optimum plus `offset`.
struct SdpInstance {
  FormulationKind kind = FormulationKind::NOMINAL_PRIMAL;
  FormSide side = FormSide::PRIMAL;
  Rat eps{0};
  Rat eta{0};
  std::vector<int> block_sizes;  // positive = dense PSD, negative = diagonal
  std::vector<Rat> c;
  std::vector<SparseEntry> entries;
  Rat offset{0};
  std::optional<MomentMeta> meta;

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_blocks() const { return static_cast<int>(block_sizes.size()); }

  /// Sorts entries by (mat, block, row, col), merging duplicates and dropping
  /// zeros, so identical data always exports identically.
  void canonicalize();

  /// Structural checks (index ranges, triangle convention, diagonal blocks);
  /// throws std::invalid_argument with a description.
  void validate() const;

  /// Data equality (everything except meta).
  bool same_data(const SdpInstance& o) const;
};

/// Tag string carried in exported files, e.g. "PRIORITY_PSD(1e-08)" or
/// "NOISE_DUAL(1e-08,0.25)"; parameter-free kinds print bare names.
std::string formulation_tag(const SdpInstance& sdp);

struct ParsedTag {
  FormulationKind kind;
  Rat eps{0};
  Rat eta{0};
};
ParsedTag parse_formulation_tag(const std::string& tag);

}  // namespace momentsos
