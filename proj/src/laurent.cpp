#include "ggr/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ggr {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("exponent overflow");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("exponent overflow");
  return out;
}

namespace {

void accumulate(LaurentPoly::Terms &terms, Exponent e, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

} // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
  for (const auto &[e, c] : terms)
    accumulate(terms_, e, c);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto &kv) { return kv.second.is_zero(); });
}

LaurentPoly LaurentPoly::constant(const Rational &c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational &c) {
  LaurentPoly p;
  if (!c.is_zero())
    p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::t_minus_one_pow(std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("(t-1)^n requires n >= 0");
  Terms terms;
  for (std::int64_t j = 0; j <= n; ++j) {
    Integer c = binomial(n, j);
    if ((n - j) % 2 != 0)
      c = -c;
    terms.emplace(j, Rational(c));
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::generator(std::int64_t n, std::int64_t k, std::int64_t s) {
  if (s <= 0)
    throw std::invalid_argument("generator dilation must be positive");
  LaurentPoly base = mul(monomial(-k), t_minus_one_pow(n));
  return substitute_power(base, s);
}

Rational LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty())
    throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty())
    throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;

    bool unit = mag == Rational(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit)
      os << mag << "*";
    os << "t";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

LaurentPoly add(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly::Terms terms = a.terms();
  for (const auto &[e, c] : b.terms())
    accumulate(terms, e, c);
  return LaurentPoly(std::move(terms));
}

LaurentPoly sub(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly::Terms terms = a.terms();
  for (const auto &[e, c] : b.terms())
    accumulate(terms, e, -c);
  return LaurentPoly(std::move(terms));
}

LaurentPoly scale(const LaurentPoly &a, const Rational &c) {
  if (c.is_zero())
    return {};
  LaurentPoly::Terms terms;
  for (const auto &[e, v] : a.terms())
    terms.emplace_hint(terms.end(), e, v * c);
  return LaurentPoly(std::move(terms));
}

LaurentPoly mul(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly::Terms terms;
  for (const auto &[ea, ca] : a.terms())
    for (const auto &[eb, cb] : b.terms())
      accumulate(terms, checked_add(ea, eb), ca * cb);
  return LaurentPoly(std::move(terms));
}

LaurentPoly pow(const LaurentPoly &a, std::int64_t e) {
  if (e < 0)
    throw std::invalid_argument("negative polynomial power");
  LaurentPoly result = LaurentPoly::constant(1);
  LaurentPoly base = a;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    e >>= 1;
    if (e > 0)
      base = mul(base, base);
  }
  return result;
}

LaurentPoly substitute_power(const LaurentPoly &a, std::int64_t s) {
  if (s <= 0)
    throw std::invalid_argument("substitute_power requires s >= 1");
  LaurentPoly::Terms terms;
  for (const auto &[e, c] : a.terms())
    terms.emplace_hint(terms.end(), checked_mul(e, s), c);
  return LaurentPoly(std::move(terms));
}

Rational theta_moment(const LaurentPoly &a, std::int64_t m) {
  if (m < 0)
    throw std::invalid_argument("moment order must be nonnegative");
  Rational total = 0;
  for (const auto &[e, c] : a.terms()) {
    // mpz_pow_ui gives 0^0 = 1.
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(static_cast<long>(e)).get_mpz_t(), static_cast<unsigned long>(m));
    total += c * Rational(p);
  }
  return total;
}

Rational evaluate(const LaurentPoly &a, const Rational &x) {
  if (x.is_zero() && !a.is_zero() && a.min_exponent() < 0)
    throw std::domain_error("evaluating a negative power at t = 0");
  Rational total = 0;
  for (const auto &[e, c] : a.terms())
    total += c * x.pow(e);
  return total;
}

} // namespace ggr
