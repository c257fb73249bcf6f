#include "ggr/difference.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ggr {

DifferenceScheme::DifferenceScheme(std::vector<SchemeTerm> terms, std::int64_t order_hint)
    : order_hint_(order_hint) {
  if (order_hint < 0)
    throw std::invalid_argument("order hint must be nonnegative");
  std::map<Node, Rational, std::greater<>> merged;
  for (auto &t : terms)
    merged[t.node] += t.coeff;
  for (auto &[node, coeff] : merged)
    if (!coeff.is_zero())
      terms_.push_back({node, std::move(coeff)});
}

std::vector<Node> DifferenceScheme::nodes() const {
  std::vector<Node> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_)
    out.push_back(t.node);
  return out;
}

std::string DifferenceScheme::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[node, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (mag != Rational(1))
      os << mag << "*";
    os << "f(c";
    if (node == 1)
      os << "+h";
    else if (node == -1)
      os << "-h";
    else if (node > 0)
      os << "+" << node << "h";
    else if (node < 0)
      os << node << "h";
    os << ")";
  }
  return os.str();
}

DifferenceScheme ggr_difference(std::int64_t n, std::int64_t k) {
  if (n < 1)
    throw std::invalid_argument("ggr_difference requires n >= 1");
  std::vector<SchemeTerm> terms;
  for (std::int64_t j = 0; j <= n; ++j) {
    Integer c = binomial(n, j);
    if ((n - j) % 2 != 0)
      c = -c;
    terms.push_back({checked_add(j, -k), Rational(c)});
  }
  return DifferenceScheme(std::move(terms), n);
}

LaurentPoly to_laurent(const DifferenceScheme &d) {
  LaurentPoly::Terms terms;
  for (const auto &t : d.terms())
    terms.emplace(t.node, t.coeff);
  return LaurentPoly(std::move(terms));
}

DifferenceScheme from_laurent(const LaurentPoly &p, std::int64_t order_hint) {
  std::vector<SchemeTerm> terms;
  terms.reserve(p.size());
  for (const auto &[e, c] : p.terms())
    terms.push_back({e, c});
  return DifferenceScheme(std::move(terms), order_hint);
}

DifferenceScheme dilate(const DifferenceScheme &d, std::int64_t s) {
  if (s <= 0)
    throw std::invalid_argument("dilate requires s >= 1");
  std::vector<SchemeTerm> terms;
  terms.reserve(d.terms().size());
  for (const auto &t : d.terms())
    terms.push_back({checked_mul(t.node, s), t.coeff});
  return DifferenceScheme(std::move(terms), d.order_hint());
}

LaurentPoly mz_polynomial(std::int64_t n) {
  if (n < 1)
    throw std::invalid_argument("mz_polynomial requires n >= 1");
  LaurentPoly r = {{1, Rational(1)}, {0, Rational(-1)}};
  for (std::int64_t m = 2; m <= n; ++m)
    r = sub(substitute_power(r, 2), scale(r, Rational(pow2(m - 1))));
  return r;
}

DifferenceScheme mz_difference(std::int64_t n) { return from_laurent(mz_polynomial(n), n); }

DifferenceScheme linear_combination(const std::vector<SchemePart> &parts) {
  std::vector<SchemeTerm> terms;
  for (const auto &part : parts) {
    if (part.s <= 0)
      throw std::invalid_argument("linear_combination requires s >= 1");
    for (const auto &t : part.scheme.terms())
      terms.push_back({checked_mul(t.node, part.s), part.coeff * t.coeff});
  }
  std::int64_t order = parts.empty() ? 0 : parts.front().scheme.order_hint();
  return DifferenceScheme(std::move(terms), order);
}

} // namespace ggr
