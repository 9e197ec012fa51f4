#pragma once

#include <string>

#include "momentsos/moment_problem.hpp"
#include "momentsos/rational.hpp"

namespace momentsos {

/// The Motzkin form x^4 y^2 + x^2 y^4 - x^2 y^2 + 1/27: nonnegative on R^2
/// but not a sum of squares, minimum 0 at the four points (+-3^-1/2, +-3^-1/2).
Polynomial make_motzkin();

/// (x-100)^2 ((x-1)^2 + gamma/99^2): badly scaled univariate double well.
/// gamma = 0 leaves two global minimizers (1 and 100, both at value 0);
/// gamma > 0 keeps only x = 100 global, with a near-tie local well at x = 1.
Polynomial make_univariate(const Rat& gamma);

/// Builtin problems assembled with exact coefficients:
///   "motzkin"            n=2, unconstrained, default order 8
///   "motzkin-perturbed"  Motzkin plus gamma times every even square of
///                        degree <= 16 (SOS once gamma > 0), order 8
///   "univariate"         n=1, unconstrained, default order 3 (gamma = well
///                        separation parameter)
/// Throws std::invalid_argument for unknown names.
MomentProblem builtin_problem(const std::string& name, const Rat& gamma = Rat(0));

/// Reads a problem description from JSON text. Fields:
///   variables    int >= 1                                  (required)
///   objective    array of term lines, or one string        (required)
///   constraints  array of polynomials, same formats        (optional)
///   order        int >= 1                                  (required)
///   ball_N       rational                                  (optional)
///   noise        {"epsilon": rational, "eta": rational}    (optional)
/// A term line is "coeff e1 ... en" with coeff an integer or "num/den"
/// fraction; '#' starts a comment. Rational fields accept JSON integers,
/// floats, and strings ("3/7", "0.125", "1e-30"); strings are parsed
/// digit-exactly, floats enter as their exact binary value. Errors name
/// `origin` and the offending term line.
MomentProblem parse_problem_text(const std::string& text,
                                 const std::string& origin = "<memory>");

/// parse_problem_text applied to a file's contents.
MomentProblem load_problem_file(const std::string& path);

/// Serialization that round-trips through parse_problem_text exactly.
std::string problem_to_text(const MomentProblem& mp);

}  // namespace momentsos
