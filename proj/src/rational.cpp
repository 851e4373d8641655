#include "hyperlin/rational.hpp"

#include <ostream>

#include "hyperlin/error.hpp"

namespace hyperlin {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::SyntaxError, "zero denominator");
  }
  q_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_integer_text = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class n(strip_plus(num));
  mpz_class d(strip_plus(den));
  if (d == 0) {
    throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::Singular, "division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational common_denominator(const Rational* begin, const Rational* end) {
  mpz_class l = 1;
  for (const Rational* it = begin; it != end; ++it) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->gmp().get_den_mpz_t());
  }
  return Rational(mpq_class(l));
}

}  // namespace hyperlin
