#include "surfaut/rational.hpp"

#include <limits>
#include <ostream>

#include "surfaut/error.hpp"

namespace surfaut {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text);
  if (digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

bool fits_int64(const Integer& value) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) throw InputError("integer out of 64-bit range: " + to_string(value));
  return std::stoll(to_string(value));
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InputError("floor_div: zero divisor");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw InputError("floor_div: zero divisor");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw InputError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Integer Rational::floor() const { return floor_div(value_.get_num(), value_.get_den()); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return to_string(value_.get_num());
  return to_string(value_.get_num()) + "/" + to_string(value_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace surfaut
