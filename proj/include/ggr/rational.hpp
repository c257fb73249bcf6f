#ifndef GGR_RATIONAL_HPP
#define GGR_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ggr {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t v) : value_(static_cast<long>(v)) {}
  Rational(const Integer &num) : value_(num) {}
  Rational(const Integer &num, const Integer &den);

  /// Parses "p", "p/q", or a finite decimal such as "-0.125" or "1e-3".
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rational operator-() const { return from_mpq(-value_); }
  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
  friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

  /// Integer power; negative exponents invert (throws std::domain_error on 0).
  Rational pow(std::int64_t e) const;

  const mpq_class &raw() const { return value_; }

private:
  static Rational from_mpq(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

/// 2^e for e >= 0.
Integer pow2(std::int64_t e);

} // namespace ggr

#endif // GGR_RATIONAL_HPP
