#include "mono/rational.hpp"

#include <cctype>
#include <string>

#include "mono/errors.hpp"

namespace mono {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

}  // namespace mono
