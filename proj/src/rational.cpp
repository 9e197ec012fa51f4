#include "momentsos/rational.hpp"

#include <cctype>

namespace momentsos {

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), e);
  num.canonicalize();
  return num;
}

Rat rat_of_double(double d) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

namespace {

Rat pow10(long e) {
  Rat t;
  mpz_ui_pow_ui(t.get_num_mpz_t(), 10u, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) {
    mpq_inv(t.get_mpq_t(), t.get_mpq_t());
  }
  return t;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("malformed rational: " + text);
    try {
      Rat q(num + "/" + den, 10);  // explicit base: GMP's base 0 would octal-ize leading zeros
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw;
    } catch (...) {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }

  // Decimal / scientific form, parsed digit-exactly.
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    if (es.empty() || es.find_first_not_of("+-0123456789") != std::string::npos ||
        es.find_first_of("0123456789") == std::string::npos) {
      throw std::invalid_argument("malformed exponent: " + text);
    }
    exp10 = std::stol(es);
    s = s.substr(0, epos);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto dot = s.find('.');
  std::string digits = s;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exp10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  Rat q{mpz_class(digits, 10)};
  q *= pow10(exp10);
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

std::string format_rational(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace momentsos
