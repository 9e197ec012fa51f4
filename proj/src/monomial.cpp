#include "momentsos/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace momentsos {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

Monomial Monomial::operator+(const Monomial& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Monomial::divides_into(const Monomial& o) const {
  if (e.size() != o.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > o.e[i]) return false;
  }
  return true;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= o.e[i];
    if (r.e[i] < 0) throw std::invalid_argument("negative exponent in monomial difference");
  }
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: the monomial with the lexicographically larger exponent
  // vector comes first (x1^2 before x1*x2 before x2^2).
  return a.e > b.e;
}

namespace {

void fill_degree(int deg, int pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == cur.nvars()) {
    cur.e[pos] = deg;
    out.push_back(cur);
    cur.e[pos] = 0;
    return;
  }
  for (int k = deg; k >= 0; --k) {
    cur.e[pos] = k;
    fill_degree(deg - k, pos + 1, cur, out);
  }
  cur.e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("monomial_basis: need n >= 1, d >= 0");
  std::vector<Monomial> out;
  out.reserve(basis_size(n, d));
  Monomial cur = Monomial::zero(n);
  for (int deg = 0; deg <= d; ++deg) fill_degree(deg, 0, cur, out);
  return out;
}

int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m, GradedLexLess{});
  if (it == basis.end() || !(*it == m)) return -1;
  return static_cast<int>(it - basis.begin());
}

std::size_t basis_size(int n, int d) {
  // C(n+d, n)
  std::size_t r = 1;
  for (int i = 1; i <= n; ++i) r = r * (d + i) / i;
  return r;
}

}  // namespace momentsos
