#ifndef GGR_DIFFERENCE_HPP
#define GGR_DIFFERENCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ggr/laurent.hpp"
#include "ggr/rational.hpp"

namespace ggr {

using Node = std::int64_t;

struct SchemeTerm {
  Node node;
  Rational coeff;

  friend bool operator==(const SchemeTerm &, const SchemeTerm &) = default;
};

/// A difference sum_j c_j f(c + b_j h) with integer nodes b_j.
///
/// Terms are stored sorted by descending node with distinct nodes and nonzero
/// coefficients, so structural equality is term-list equality. The order hint
/// is the power of h a quotient divides by.
class DifferenceScheme {
public:
  DifferenceScheme() = default;
  /// Merges repeated nodes and drops zero coefficients.
  DifferenceScheme(std::vector<SchemeTerm> terms, std::int64_t order_hint);

  const std::vector<SchemeTerm> &terms() const { return terms_; }
  std::int64_t order_hint() const { return order_hint_; }
  bool empty() const { return terms_.empty(); }

  std::vector<Node> nodes() const;

  friend bool operator==(const DifferenceScheme &, const DifferenceScheme &) = default;

  /// e.g. "f(c+2h) - 2*f(c+h) + f(c)".
  std::string to_string() const;

private:
  std::vector<SchemeTerm> terms_;
  std::int64_t order_hint_ = 0;
};

/// Delta_k: sum_{j=0}^{n} (-1)^(n-j) C(n,j) f(c + (j-k)h).
DifferenceScheme ggr_difference(std::int64_t n, std::int64_t k);

LaurentPoly to_laurent(const DifferenceScheme &d);
DifferenceScheme from_laurent(const LaurentPoly &p, std::int64_t order_hint);

/// Replaces h by s*h. Throws std::invalid_argument for s <= 0.
DifferenceScheme dilate(const DifferenceScheme &d, std::int64_t s);

/// r_1 = t - 1, r_n(t) = r_{n-1}(t^2) - 2^(n-1) r_{n-1}(t).
LaurentPoly mz_polynomial(std::int64_t n);

/// R_1(h) = f(c+h) - f(c), R_n(h) = R_{n-1}(2h) - 2^(n-1) R_{n-1}(h).
DifferenceScheme mz_difference(std::int64_t n);

struct SchemePart {
  Rational coeff;
  std::int64_t s;
  DifferenceScheme scheme;
};

/// sum_i coeff_i * d_i(s_i h). The order hint is taken from the first part
/// (zero for an empty list).
DifferenceScheme linear_combination(const std::vector<SchemePart> &parts);

/// Exact value of sum_j c_j f_j, looking up f at each node through `sample`.
template <class Sample>
Rational apply_scheme(const DifferenceScheme &d, Sample &&sample) {
  Rational total = 0;
  for (const auto &t : d.terms())
    total += t.coeff * sample(t.node);
  return total;
}

} // namespace ggr

#endif // GGR_DIFFERENCE_HPP
