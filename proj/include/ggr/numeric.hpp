#ifndef GGR_NUMERIC_HPP
#define GGR_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ggr/certificate.hpp"
#include "ggr/difference.hpp"
#include "ggr/rational.hpp"

namespace ggr {

/// A value in either evaluation channel: exact rational or double.
using Number = std::variant<Rational, double>;

double to_double(const Number &x);
bool is_exact(const Number &x);
std::string to_string(const Number &x);

/// Polynomial with rational coefficients, lowest degree first.
struct PolyFn {
  std::vector<Rational> coeffs;
};
struct ExpFn {};
struct SinFn {};
/// |x|^alpha, alpha > 0.
struct AbsPowFn {
  double alpha;
};
/// x^m sin(x^-p) for x != 0 and 0 at x = 0.
struct OscFn {
  std::int64_t m;
  double p;
};

/// Test function for difference quotients. POLY is exact at rational
/// points; the other families are evaluated in double precision with the
/// accuracy of the C library's exp, sin and pow.
class TestFunction {
public:
  using Kind = std::variant<PolyFn, ExpFn, SinFn, AbsPowFn, OscFn>;

  explicit TestFunction(Kind kind);

  /// "poly:a0,a1,...", "exp", "sin", "abs_pow:alpha", "osc:m,p".
  /// Throws std::invalid_argument on a bad spec.
  static TestFunction parse(std::string_view spec);

  const Kind &kind() const { return kind_; }
  bool is_poly() const { return std::holds_alternative<PolyFn>(kind_); }

  double operator()(double x) const;
  /// Throws std::logic_error unless is_poly().
  Rational operator()(const Rational &x) const;

  std::string describe() const;

private:
  Kind kind_;
};

/// sum_j c_j f(c + b_j h) / h^n with n the scheme's order hint. Exact when
/// f is POLY and both c and h are rational; double otherwise.
/// Throws std::invalid_argument when h = 0 or the order hint is zero.
Number quotient(const DifferenceScheme &d, const TestFunction &f, const Number &c, const Number &h);

/// Float-channel evaluations at h < 1e-3 for n >= 6 are never trusted.
inline constexpr std::int64_t kUnreliableOrder = 6;
inline constexpr double kUnreliableStep = 1e-3;

struct QuotientRow {
  Number h;
  Number q;
  bool reliable = true;
  /// Rounding estimate sum_j |c_j| ulp(f(c + b_j h)) / |h|^n; zero when exact.
  double error_bound = 0.0;
};

struct QuotientTable {
  DifferenceScheme scheme;
  Number center;
  std::int64_t order = 0;
  bool exact = false;
  std::vector<QuotientRow> rows;

  nlohmann::ordered_json to_json() const;
};

/// Rows at h0 * ratio^i for i = 0..steps-1.
QuotientTable quotient_table(const DifferenceScheme &d, const TestFunction &f, const Number &c,
                             const Number &h0, const Number &ratio, std::int64_t steps);

struct DemoOptions {
  CaseTag case_tag = CaseTag::Ggr;
  Number h0 = Rational(1, 10);
  Number ratio = Rational(1, 2);
  std::int64_t steps = 8;
  /// Agreement tolerance for the float channel, relative to max(1, |ref|).
  double tolerance = 1e-2;
};

struct LabeledTable {
  std::string label;
  /// The table's limit divided by this estimates the common limit
  /// (1 for Delta_k; theta_n(r_n)/n! for R_n and the certified combination).
  Rational normalizer;
  QuotientTable table;
};

struct DemoReport {
  std::int64_t n = 0;
  CaseTag case_tag = CaseTag::Ggr;
  std::string function;
  Number center;
  Certificate certificate;
  std::vector<LabeledTable> tables;
  bool agree = false;
  bool exact = false;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Quotient tables for every admissible Delta_k, for R_n, and for the
/// certified combination of dilated Delta_k, plus an agreement flag over the
/// normalized smallest-h rows. Requires n >= 2.
DemoReport demo_ggr(std::int64_t n, const TestFunction &f, const Number &c, const DemoOptions &opts = {});

} // namespace ggr

#endif // GGR_NUMERIC_HPP
