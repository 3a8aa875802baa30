#include "sic/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace sic {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw ArithmeticError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  q_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ArithmeticError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw ArithmeticError("cannot rationalize a non-finite value");
  if (max_denominator < 1) throw ArithmeticError("max_denominator must be positive");
  // Exact value of the double, then continued-fraction expansion.
  const mpq_class target(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpq_class rest = target;
  const mpz_class bound(static_cast<long>(max_denominator));
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > bound) {
      // Best semiconvergent p0 + k p1 with k <= (bound - q0) / q1.
      const mpz_class k = (bound - q0) / q1;
      const mpq_class semi(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
      const mpq_class conv(p1, q1);
      mpq_class semi_c = semi, conv_c = conv;
      semi_c.canonicalize();
      conv_c.canonicalize();
      return Rational(abs(semi_c - target) < abs(conv_c - target) ? semi_c : conv_c);
    }
    const mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const mpq_class frac = rest - mpq_class(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  mpq_class result(p1, q1);
  result.canonicalize();
  return Rational(result);
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '*' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ArithmeticError("empty complex entry");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string::npos) return {Rational(0), imag_of(s)};
  return {Rational::parse(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  const std::string sign = im.sign() < 0 ? "-" : "+";
  return re.str() + sign + abs(im).str() + "i";
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational den = o.norm();
  if (den.is_zero()) throw ArithmeticError("division by zero");
  *this *= o.conj();
  re /= den;
  im /= den;
  return *this;
}

}  // namespace sic
