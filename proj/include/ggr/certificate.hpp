#ifndef GGR_CERTIFICATE_HPP
#define GGR_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggr/difference.hpp"
#include "ggr/laurent.hpp"
#include "ggr/rational.hpp"

namespace ggr {

enum class CaseTag { Ggr, Variant };

std::string_view to_string(CaseTag c);
/// Accepts "ggr" or "variant"; throws std::invalid_argument otherwise.
CaseTag parse_case(std::string_view text);

/// Admissible k values for r_n's span space, in the Delta_k node
/// convention (generator t^(-s*k) (t^s - 1)^n).
///
/// GGR: 1..n-1, plus 0 when n is even; n = 1 admits k = 0 only.
/// VARIANT: -(n-2)..0, requires n >= 2.
std::vector<std::int64_t> admissible_k(std::int64_t n, CaseTag c);

/// Throws std::invalid_argument if n is below the case's minimum.
void require_supported(std::int64_t n, CaseTag c);

struct CertTerm {
  std::int64_t k;
  std::int64_t s;
  Rational coeff;

  friend bool operator==(const CertTerm &, const CertTerm &) = default;
};

/// Asserts r_n = sum coeff * t^(-s*k) (t^s - 1)^n.
struct Certificate {
  std::int64_t n = 0;
  CaseTag case_tag = CaseTag::Ggr;
  std::vector<CertTerm> terms; // sorted by (s, k)

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

/// Builds a certificate from (s, k) -> coeff, dropping zero coefficients.
Certificate make_certificate(std::int64_t n, CaseTag c,
                             const std::map<std::pair<std::int64_t, std::int64_t>, Rational> &by_s_k);

class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant of the constructive proof (for instance a
/// nonzero remainder in a division the proof guarantees is exact).
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Generator {
  std::int64_t k;
  std::int64_t s;
  LaurentPoly poly;
};

/// t^(-s*k) (t^s - 1)^n for admissible k and 1 <= s <= s_max, ordered by
/// (s, k).
std::vector<Generator> generators(std::int64_t n, CaseTag c, std::int64_t s_max);

/// A generator of the induction bases used during the induction.
///
/// POWER is (t^s - 1)^power; SHIFTED is t^(-k) (t - 1)^power evaluated at
/// t^s. Either carries a rational weight.
struct BasisElement {
  enum class Form { Power, Shifted };

  Form form;
  std::int64_t s;
  std::int64_t k; // unused for Power
  std::int64_t power;
  Rational weight;

  LaurentPoly to_laurent() const;
};

/// r_n written in the induction basis the induction carries: (t^s-1)^(n+k),
/// 0 <= k <= n-2, for VARIANT; for GGR the center element
/// t^(-floor(n/2)) (t-1)^n (or t^(-(n-1)/2) for odd n) together with
/// t^(-k) (t-1)^(n+1) for the remaining k, each dilated by s.
std::vector<BasisElement> basis_representation(std::int64_t n, CaseTag c);

/// Quotient of p by (t - 1) via synthetic division. p must have only
/// nonnegative exponents. A nonzero remainder raises InvariantViolation.
LaurentPoly divide_by_t_minus_one(const LaurentPoly &p);

/// Certificate built by running the inductive construction.
Certificate certify_inductive(std::int64_t n, CaseTag c);

/// Certificate found by solving the exact linear system over generators
/// with s restricted to s_candidates. Throws InfeasibleError when r_n is not
/// in their span.
Certificate certify_solver(std::int64_t n, CaseTag c, const std::vector<std::int64_t> &s_candidates);

/// Powers of two up to 2^(n-1), widening to every integer in
/// [1, 2^(n-1)] when the first set is infeasible.
Certificate certify_solver(std::int64_t n, CaseTag c);

std::vector<std::int64_t> power_of_two_candidates(std::int64_t s_max);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
  LaurentPoly difference; // expansion minus r_n
};

VerifyResult verify(const Certificate &cert);

/// The expanded sum of coeff * t^(-s*k) (t^s - 1)^n.
LaurentPoly expand(const Certificate &cert);

/// sum coeff * s^n * n!, the order-n moment of the certified combination.
Rational moment_checksum(const Certificate &cert);

/// prod_{j=1}^{n-1} (2^n - 2^j), the order-n moment of r_n.
Integer mz_leading_moment(std::int64_t n);

struct CertificateIdentity {
  DifferenceScheme mz;       // R_n
  DifferenceScheme combined; // sum coeff * Delta_k(s h)
  bool equal = false;
  std::string text;          // "R_n(h) = ..." rendering
};

/// Throws std::invalid_argument if the certificate does not verify.
CertificateIdentity certificate_identity(const Certificate &cert);

} // namespace ggr

#endif // GGR_CERTIFICATE_HPP
