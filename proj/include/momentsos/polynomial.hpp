#pragma once

#include <map>
#include <string>
#include <vector>

#include "momentsos/monomial.hpp"
#include "momentsos/rational.hpp"

namespace momentsos {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in graded lex order and zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GradedLexLess>;

  Polynomial() : n_(0) {}
  explicit Polynomial(int nvars) : n_(nvars) {}

  int nvars() const { return n_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coefficient(const Monomial& m) const;
  /// Sets (or erases, when c == 0) the coefficient of m.
  void set_coefficient(const Monomial& m, const Rat& c);
  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& s) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Rat eval(const std::vector<Rat>& x) const;
  double eval_double(const std::vector<double>& x) const;

  /// Partial derivative with respect to variable var (0-based).
  Polynomial derivative(int var) const;

  /// One term per line: "coeff e1 e2 ... en" with coeff as "num" or "num/den".
  /// '#' starts a comment; blank lines are skipped.
  std::string to_text() const;
  static Polynomial from_text(const std::string& text, int nvars);
  /// Parses a single term line; used by both the text format and problem files.
  static std::pair<Monomial, Rat> parse_term_line(const std::string& line, int nvars);

  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int var, int power = 1);

 private:
  int n_;
  TermMap terms_;
};

inline Polynomial operator*(const Rat& s, const Polynomial& p) { return p * s; }

}  // namespace momentsos
