#pragma once

#include <vector>

#include "momentsos/polynomial.hpp"

namespace momentsos {

/// Closed interval with exact rational endpoints.
struct Interval {
  Rat lo, hi;
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

namespace uni {
/// Dense univariate coefficients, low degree first, trailing zeros trimmed.
using Coeffs = std::vector<Rat>;

Coeffs from_polynomial(const Polynomial& p);  // throws unless p.nvars() == 1
int degree(const Coeffs& c);                  // -1 for zero
Rat eval(const Coeffs& c, const Rat& x);
Coeffs derivative(const Coeffs& c);
}  // namespace uni

/// Sturm chain of the squarefree part of a univariate polynomial; exact sign
/// variation counts certify the number of distinct real roots per interval.
class SturmChain {
 public:
  explicit SturmChain(const uni::Coeffs& p);  // throws on the zero polynomial
  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rat& a, const Rat& b) const;
  int variations(const Rat& x) const;
  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<uni::Coeffs> chain_;
};

struct RootIsolation {
  /// Disjoint intervals, sorted, each certified to contain exactly one
  /// distinct real root. Endpoints are dyadic (bisection runs on a
  /// power-of-two-anchored grid), except where clipped at the search range.
  std::vector<Interval> intervals;
  Rat width_target;
};

/// Certified isolation of the distinct real roots of p in [lo, hi], with each
/// interval refined to width <= width. A root exactly at lo is reported as the
/// degenerate interval [lo, lo].
RootIsolation isolate_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi,
                                 const Rat& width = Rat(1, 1000000));

/// Distinct real roots of p in (lo, hi].
int count_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi);

/// Local minimizers of f on [lo, hi]: isolates the roots of f' and keeps those
/// where f' goes from negative to positive (certified flanking signs).
std::vector<Interval> local_minima(const Polynomial& f, const Rat& lo, const Rat& hi,
                                   const Rat& width = Rat(1, 1000000));

}  // namespace momentsos
