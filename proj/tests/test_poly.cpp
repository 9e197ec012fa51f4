#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momentsos/monomial.hpp"
#include "momentsos/perturb.hpp"
#include "momentsos/polynomial.hpp"
#include "momentsos/rational.hpp"

using namespace momentsos;

TEST_CASE("rational parsing round-trips exactly") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-7/2") == Rat(-7, 2));
  CHECK(parse_rational("0.125") == Rat(1, 8));
  CHECK(parse_rational("1e-8") == Rat(1, 100000000));
  CHECK(parse_rational("2.5e3") == Rat(2500));
  CHECK(parse_rational("-1.5e-1") == Rat(-3, 20));
  CHECK(parse_rational(" 4/6 ") == Rat(2, 3));
  CHECK(format_rational(Rat(-3, 20)) == "-3/20");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational of double is exact for dyadic values") {
  CHECK(rat_of_double(0.5) == Rat(1, 2));
  CHECK(rat_of_double(-0.75) == Rat(-3, 4));
  CHECK(rat_of_double(3.0) == Rat(3));
  // 0.1 is not dyadic; conversion picks up the stored binary value exactly.
  Rat q = rat_of_double(0.1);
  CHECK(to_double(q) == 0.1);
  CHECK(q != Rat(1, 10));
}

TEST_CASE("rat_pow handles negative bases and zero exponent") {
  CHECK(rat_pow(Rat(-2, 3), 3) == Rat(-8, 27));
  CHECK(rat_pow(Rat(7, 5), 0) == Rat(1));
  CHECK(rat_pow(Rat(0), 5) == Rat(0));
}

TEST_CASE("monomial basis is graded lex ordered with binomial size") {
  auto b = monomial_basis(2, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0].e == std::vector<int>{0, 0});
  CHECK(b[1].e == std::vector<int>{1, 0});
  CHECK(b[2].e == std::vector<int>{0, 1});
  CHECK(b[3].e == std::vector<int>{2, 0});
  CHECK(b[4].e == std::vector<int>{1, 1});
  CHECK(b[5].e == std::vector<int>{0, 2});
  CHECK(basis_size(2, 2) == 6);
  CHECK(basis_size(2, 9) == 55);    // rows of the order-9 moment matrix in 2 vars
  CHECK(basis_size(2, 16) == 153);  // all monomials of degree <= 16 in 2 vars
  CHECK(basis_size(1, 16) == 17);
  CHECK(basis_size(3, 4) == 35);
}

TEST_CASE("basis_index finds every member and rejects strangers") {
  auto b = monomial_basis(3, 3);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(basis_index(b, b[i]) == (int)i);
  CHECK(basis_index(b, Monomial({4, 0, 0})) == -1);
}

TEST_CASE("monomial division and arithmetic") {
  Monomial a({2, 1}), b({1, 1}), c({1, 0});
  CHECK(b.divides_into(a));
  CHECK(!a.divides_into(b));
  CHECK((a - b) == c);
  CHECK((b + c) == a);
  CHECK(a.degree() == 3);
  CHECK(Monomial::zero(2).degree() == 0);
  CHECK(a.str() == "x1^2*x2");
  CHECK(Monomial::zero(2).str() == "1");
}

static Polynomial motzkin_like() {
  // 1/27 + x1^2 x2^2 (x1^2 + x2^2 - 1)
  Polynomial f(2);
  f.add_term(Monomial({0, 0}), Rat(1, 27));
  f.add_term(Monomial({4, 2}), Rat(1));
  f.add_term(Monomial({2, 4}), Rat(1));
  f.add_term(Monomial({2, 2}), Rat(-1));
  return f;
}

TEST_CASE("polynomial arithmetic and exact evaluation") {
  Polynomial f = motzkin_like();
  CHECK(f.degree() == 6);
  CHECK(f.term_count() == 4);

  // Global minimum value 0 at x = (±1/sqrt(3), ±1/sqrt(3)); at the nearby
  // rational point (577/1000, 577/1000) the value is tiny but positive-ish.
  Rat s(577, 1000);
  Rat v = f.eval({s, s});
  CHECK(rat_abs(v) < Rat(1, 100000));
  CHECK(v == Rat(1, 27) + rat_pow(s, 6) * 2 - rat_pow(s, 4));

  Polynomial g = f * Rat(3) - f - f - f;
  CHECK(g.is_zero());
  CHECK((f * f).degree() == 12);
  CHECK((f * f).eval({s, s}) == v * v);
}

TEST_CASE("derivative matches hand computation") {
  Polynomial f = motzkin_like();
  Polynomial fx = f.derivative(0);
  // d/dx1: 4 x1^3 x2^2 + 2 x1 x2^4 - 2 x1 x2^2
  Polynomial expect(2);
  expect.add_term(Monomial({3, 2}), Rat(4));
  expect.add_term(Monomial({1, 4}), Rat(2));
  expect.add_term(Monomial({1, 2}), Rat(-2));
  CHECK(fx == expect);
  CHECK(f.derivative(1).derivative(0) == f.derivative(0).derivative(1));
}

TEST_CASE("text round trip preserves coefficients exactly") {
  Polynomial f = motzkin_like();
  Polynomial g = Polynomial::from_text(f.to_text(), 2);
  CHECK(f == g);

  std::string txt = "# objective\n1/27 0 0\n-1 2 2\n1 4 2\n\n1 2 4\n";
  CHECK(Polynomial::from_text(txt, 2) == f);
  CHECK_THROWS(Polynomial::from_text("1 2", 2));         // missing exponent
  CHECK_THROWS(Polynomial::from_text("1 2 3 4", 2));     // trailing token
  CHECK_THROWS(Polynomial::from_text("1 -1 0", 2));      // negative exponent
}

TEST_CASE("even square perturbation on the unit slice") {
  // Frozen by hand: f = x^2, g = [1 - x^2], j = 2, theta = 1.
  // g0 = 1 contributes sum_{b<=2} x^{2b} = 1 + x^2 + x^4;
  // g1 has half-degree 1, contributes (1 - x^2)(1 + x^2) = 1 - x^4.
  // Total added: 2 + x^2, so result is 2 + 2 x^2.
  Polynomial f = Polynomial::variable(1, 0, 2);
  Polynomial g(1);
  g.add_term(Monomial({0}), Rat(1));
  g.add_term(Monomial({2}), Rat(-1));
  Polynomial out = even_square_perturbation(f, {g}, 2, Rat(1));

  Polynomial expect(1);
  expect.add_term(Monomial({0}), Rat(2));
  expect.add_term(Monomial({2}), Rat(2));
  CHECK(out == expect);
}

TEST_CASE("even square perturbation without constraints hits every even block") {
  // f = 0, no constraints, j = 2, theta = 1/10 in 2 vars:
  // (1/10) * (1 + x1^2 + x2^2 + x1^4 + x1^2 x2^2 + x2^4).
  Polynomial f(2);
  Polynomial out = even_square_perturbation(f, {}, 2, Rat(1, 10));
  CHECK(out.term_count() == 6);
  for (const auto& [m, c] : out.terms()) {
    CHECK(c == Rat(1, 10));
    for (int ei : m.e) CHECK(ei % 2 == 0);
  }
}

TEST_CASE("half_degree follows ceil(deg/2)") {
  Polynomial c1 = Polynomial::constant(1, Rat(5));
  CHECK(half_degree(c1) == 0);
  CHECK(half_degree(Polynomial::variable(2, 0, 1)) == 1);
  CHECK(half_degree(Polynomial::variable(2, 0, 2)) == 1);
  CHECK(half_degree(Polynomial::variable(2, 1, 3)) == 2);
}

TEST_CASE("orthant l1 perturbation lifts every coefficient") {
  // p = x^2 - x on [0, inf): eps * (1 + x + ... + x^4) for j = 2.
  Polynomial p(1);
  p.add_term(Monomial({2}), Rat(1));
  p.add_term(Monomial({1}), Rat(-1));
  Polynomial out = l1_perturbation_orthant(p, 2, Rat(1, 100));
  CHECK(out.coefficient(Monomial({0})) == Rat(1, 100));
  CHECK(out.coefficient(Monomial({1})) == Rat(-99, 100));
  CHECK(out.coefficient(Monomial({2})) == Rat(101, 100));
  CHECK(out.coefficient(Monomial({3})) == Rat(1, 100));
  CHECK(out.coefficient(Monomial({4})) == Rat(1, 100));
  CHECK(out.degree() == 4);
}
