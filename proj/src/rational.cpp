#include "ggr/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ggr {

Rational::Rational(const Integer &num, const Integer &den) : value_(num, den) {
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (!all_digits(body))
    throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  Integer v(std::string(body), 10);
  return s.front() == '-' ? Integer(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw std::invalid_argument("malformed denominator: '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0)
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  std::int64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ev = parse_integer(text.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 10000)
      throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    exponent = ev.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<std::int64_t>(frac_part.size());
  }
  if (!all_digits(digits))
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");

  Rational r{Integer(digits, 10)};
  r *= Rational(10).pow(exponent);
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) {
    if (is_zero())
      throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(std::int64_t n) {
  if (n < 0)
    throw std::domain_error("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer pow2(std::int64_t e) {
  if (e < 0)
    throw std::domain_error("negative power of two");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

} // namespace ggr
