#include "cauchy/rational.hpp"

#include "cauchy/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace cauchy {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text, true))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos)
    return Rational(to_integer(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!valid_integer_text(den_text, false))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  Integer den = to_integer(den_text);
  if (den == 0)
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(to_integer(num_text), den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace cauchy
