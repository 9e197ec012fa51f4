#include "momentsos/roots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace momentsos {

namespace uni {

Coeffs from_polynomial(const Polynomial& p) {
  if (p.nvars() != 1) throw std::invalid_argument("univariate polynomial expected");
  Coeffs c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Rat(0));
  for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m.e[0])] = v;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Rat eval(const Coeffs& c, const Rat& x) {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Coeffs derivative(const Coeffs& c) {
  if (c.size() <= 1) return {};
  Coeffs d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<long>(k);
  return d;
}

namespace {

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Divide by the positive content (gcd of numerators over lcm of denominators):
// keeps signs, bounds coefficient growth in remainder sequences.
void make_primitive(Coeffs& c) {
  if (c.empty()) return;
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& q : c) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (num_gcd == 0) return;
  Rat scale(den_lcm, num_gcd);  // positive by construction
  for (auto& q : c) {
    q *= scale;
    q.canonicalize();
  }
}

// Remainder of a modulo b (b nonzero).
Coeffs remainder(Coeffs a, const Coeffs& b) {
  int db = degree(b);
  while (!a.empty() && degree(a) >= db) {
    int da = degree(a);
    Rat q = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    for (int k = 0; k <= db; ++k) {
      a[static_cast<std::size_t>(da - db + k)] -= q * b[static_cast<std::size_t>(k)];
    }
    a[static_cast<std::size_t>(da)] = 0;
    trim(a);
  }
  return a;
}

Coeffs gcd(Coeffs a, Coeffs b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact quotient a / b for b dividing a.
Coeffs exact_divide(Coeffs a, const Coeffs& b) {
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  int da = degree(a);
  if (da < db) return {};
  Coeffs q(static_cast<std::size_t>(da - db) + 1, Rat(0));
  while (!a.empty() && degree(a) >= db) {
    int cur = degree(a);
    Rat f = a[static_cast<std::size_t>(cur)] / b[static_cast<std::size_t>(db)];
    q[static_cast<std::size_t>(cur - db)] = f;
    for (int k = 0; k <= db; ++k) {
      a[static_cast<std::size_t>(cur - db + k)] -= f * b[static_cast<std::size_t>(k)];
    }
    trim(a);
  }
  return q;
}

int sign_at(const Coeffs& c, const Rat& x) { return sign(eval(c, x)); }

}  // namespace

}  // namespace uni

SturmChain::SturmChain(const uni::Coeffs& p_in) {
  uni::Coeffs p = p_in;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("zero polynomial has no isolated roots");
  if (uni::degree(p) == 0) {
    chain_.push_back(p);
    return;
  }
  // Work with the squarefree part: same distinct roots, all of them simple.
  uni::Coeffs dp = uni::derivative(p);
  uni::Coeffs g = uni::gcd(p, dp);
  uni::Coeffs sf = uni::degree(g) > 0 ? uni::exact_divide(p, g) : p;
  uni::make_primitive(sf);

  chain_.push_back(sf);
  uni::Coeffs cur = uni::derivative(sf);
  uni::make_primitive(cur);
  while (!cur.empty()) {
    chain_.push_back(cur);
    uni::Coeffs r = uni::remainder(chain_[chain_.size() - 2], cur);
    for (auto& q : r) q = -q;
    uni::make_primitive(r);
    cur = std::move(r);
  }
}

int SturmChain::variations(const Rat& x) const {
  int v = 0, prev = 0;
  for (const auto& c : chain_) {
    int s = uni::sign_at(c, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count(const Rat& a, const Rat& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

namespace {

Rat power_of_two_at_least(const Rat& x) {
  Rat b(1);
  while (b < x) b *= 2;
  return b;
}

}  // namespace

RootIsolation isolate_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi,
                                 const Rat& width) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: need lo < hi");
  if (!(width > 0)) throw std::invalid_argument("isolate_real_roots: need width > 0");
  uni::Coeffs c = uni::from_polynomial(p);
  SturmChain chain(c);

  RootIsolation out;
  out.width_target = width;
  // Sturm counts cover (lo, hi]; a root sitting exactly at lo is reported as a
  // degenerate interval so callers never lose it.
  if (uni::eval(c, lo) == 0) out.intervals.push_back({lo, lo});

  // Bisection runs on a dyadic grid anchored at powers of two, so interval
  // endpoints and midpoints are exact binary rationals like k/2^m.
  Rat bound = power_of_two_at_least(std::max(rat_abs(lo), rat_abs(hi)));
  Rat base_lo = lo < 0 ? -bound : Rat(0);
  std::deque<Interval> work;
  work.push_back({base_lo, bound});
  while (!work.empty()) {
    Interval iv = work.front();
    work.pop_front();
    Rat a = std::max(iv.lo, lo), b = std::min(iv.hi, hi);
    if (!(a < b)) continue;
    int k = chain.count(a, b);
    if (k == 0) continue;
    if (k == 1 && iv.width() <= width) {
      out.intervals.push_back({a, b});
      continue;
    }
    Rat m = iv.mid();
    work.push_back({iv.lo, m});
    work.push_back({m, iv.hi});
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

int count_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi) {
  SturmChain chain(uni::from_polynomial(p));
  return chain.count(lo, hi);
}

namespace {

// Sign of dc just left/right of a point r that dc vanishes at, certified by
// checking the probe segment contains no further root of dc.
int side_sign(const uni::Coeffs& dc, const SturmChain& chain, const Rat& r, bool left,
              Rat step) {
  for (int guard = 0; guard < 512; ++guard) {
    Rat t = left ? Rat(r - step) : Rat(r + step);
    int between = left ? chain.count(t, r) : chain.count(r, t);
    // (t, r] includes the root at r itself when probing left.
    int allowed = left ? 1 : 0;
    if (between == allowed) {
      int s = sign(uni::eval(dc, t));
      if (s != 0) return s;
    }
    step /= 2;
  }
  throw std::runtime_error("side_sign: could not certify flanking sign");
}

}  // namespace

std::vector<Interval> local_minima(const Polynomial& f, const Rat& lo, const Rat& hi,
                                   const Rat& width) {
  Polynomial df = f.derivative(0);
  if (df.is_zero()) return {};
  uni::Coeffs dc = uni::from_polynomial(df);
  SturmChain chain(dc);
  RootIsolation iso = isolate_real_roots(df, lo, hi, width);

  std::vector<Interval> mins;
  for (const auto& iv : iso.intervals) {
    int sl, sr;
    if (iv.lo == iv.hi) {
      sl = side_sign(dc, chain, iv.lo, true, width);
      sr = side_sign(dc, chain, iv.lo, false, width);
    } else {
      // The single root r lies in (lo, hi]; flank signs live on (lo, r) and
      // (r, hi-or-beyond). Endpoints that are themselves roots get probed past.
      sl = sign(uni::eval(dc, iv.lo));
      if (sl == 0) sl = side_sign(dc, chain, iv.lo, false, iv.width());
      sr = sign(uni::eval(dc, iv.hi));
      if (sr == 0) sr = side_sign(dc, chain, iv.hi, false, iv.width());
    }
    if (sl < 0 && sr > 0) mins.push_back(iv);
  }
  return mins;
}

}  // namespace momentsos
