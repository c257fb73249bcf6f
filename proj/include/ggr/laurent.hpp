#ifndef GGR_LAURENT_HPP
#define GGR_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "ggr/rational.hpp"

namespace ggr {

using Exponent = std::int64_t;

/// Overflow-checked exponent arithmetic; throws std::overflow_error.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Sparse Laurent polynomial in t with rational coefficients.
///
/// Terms are kept in canonical form: no stored coefficient is zero, so two
/// polynomials are equal exactly when their term maps are equal. Values are
/// immutable once built; every operation returns a fresh polynomial.
class LaurentPoly {
public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<Exponent, Rational>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Rational &c);
  static LaurentPoly monomial(Exponent e, const Rational &c = Rational(1));
  /// (t - 1)^n for n >= 0.
  static LaurentPoly t_minus_one_pow(std::int64_t n);
  /// The GGR generator t^(-s*k) * (t^s - 1)^n.
  static LaurentPoly generator(std::int64_t n, std::int64_t k, std::int64_t s);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of t^e (zero when absent).
  Rational coeff(Exponent e) const;

  Exponent min_exponent() const;
  Exponent max_exponent() const;

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly sub(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly scale(const LaurentPoly &a, const Rational &c);
LaurentPoly mul(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly pow(const LaurentPoly &a, std::int64_t e);

/// Replaces t by t^s. Throws std::invalid_argument for s <= 0.
LaurentPoly substitute_power(const LaurentPoly &a, std::int64_t s);

/// Sum of coeff * exponent^m over all terms, with 0^0 = 1.
Rational theta_moment(const LaurentPoly &a, std::int64_t m);

/// Exact value at x. Throws std::domain_error for x = 0 when a has a
/// negative exponent.
Rational evaluate(const LaurentPoly &a, const Rational &x);

inline LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) { return mul(a, b); }
inline LaurentPoly operator*(const Rational &c, const LaurentPoly &a) { return scale(a, c); }

} // namespace ggr

#endif // GGR_LAURENT_HPP
