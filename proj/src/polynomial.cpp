#include "momentsos/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace momentsos {

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::set_coefficient(const Monomial& m, const Rat& c) {
  if (m.nvars() != n_) throw std::invalid_argument("term arity mismatch");
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (m.nvars() != n_) throw std::invalid_argument("term arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, Rat(-c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma + mb, Rat(ca * cb));
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rat& s) const {
  Polynomial r(n_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Rat(-1); }

Rat Polynomial::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("eval: wrong point arity");
  // Cache powers per variable up to the needed degree.
  std::vector<std::vector<Rat>> pow(n_);
  for (int i = 0; i < n_; ++i) pow[i].push_back(Rat(1));
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < n_; ++i) {
      int e = m.e[i];
      while (static_cast<int>(pow[i].size()) <= e) {
        pow[i].push_back(Rat(pow[i].back() * x[i]));
      }
      if (e > 0) t *= pow[i][e];
    }
    acc += t;
  }
  return acc;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("eval: wrong point arity");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < n_; ++i) t *= std::pow(x[i], m.e[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= n_) throw std::invalid_argument("derivative: bad variable index");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    r.add_term(d, Rat(c * m.e[var]));
  }
  return r;
}

std::string Polynomial::to_text() const {
  std::ostringstream os;
  for (const auto& [m, c] : terms_) {
    os << format_rational(c);
    for (int i = 0; i < n_; ++i) os << " " << m.e[i];
    os << "\n";
  }
  return os.str();
}

std::pair<Monomial, Rat> Polynomial::parse_term_line(const std::string& line, int nvars) {
  std::istringstream is(line);
  std::string coeff;
  if (!(is >> coeff)) throw std::invalid_argument("empty term");
  Rat c = parse_rational(coeff);
  Monomial m = Monomial::zero(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (!(is >> m.e[i])) {
      throw std::invalid_argument("term needs " + std::to_string(nvars) +
                                  " exponents: " + line);
    }
    if (m.e[i] < 0) throw std::invalid_argument("negative exponent: " + line);
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("trailing tokens in term: " + line);
  return {m, c};
}

Polynomial Polynomial::from_text(const std::string& text, int nvars) {
  Polynomial p(nvars);
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto [m, c] = parse_term_line(line, nvars);
      p.add_term(m, c);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Monomial::zero(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var, int power) {
  if (var < 0 || var >= nvars || power < 0) {
    throw std::invalid_argument("variable: bad index or power");
  }
  Polynomial p(nvars);
  Monomial m = Monomial::zero(nvars);
  m.e[var] = power;
  p.add_term(m, Rat(1));
  return p;
}

}  // namespace momentsos
