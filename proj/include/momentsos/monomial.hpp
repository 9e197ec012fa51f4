#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace momentsos {

/// Exponent vector of a monomial in n variables.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial zero(int n) { return Monomial(std::vector<int>(n, 0)); }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  Monomial operator+(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  /// True when this monomial divides o (every exponent here <= o's).
  bool divides_into(const Monomial& o) const;
  /// Componentwise difference; caller must ensure o.divides_into(*this).
  Monomial operator-(const Monomial& o) const;

  std::string str() const;  // e.g. "x1^2*x2" or "1"
};

/// Graded lexicographic order: lower total degree first, then within a degree
/// x1 sorts before x2 before x3 (so [1, x1, x2, x1^2, x1*x2, x2^2, ...]).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in n variables of total degree <= d, in graded lex order.
/// Size is C(n+d, n).
std::vector<Monomial> monomial_basis(int n, int d);

/// Index of m in monomial_basis(n, d); -1 if deg(m) > d.
int basis_index(const std::vector<Monomial>& basis, const Monomial& m);

/// C(n+d, n) without materializing the basis.
std::size_t basis_size(int n, int d);

}  // namespace momentsos
