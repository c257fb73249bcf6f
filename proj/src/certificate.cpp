#include "ggr/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "ggr/linear_solve.hpp"

namespace ggr {

namespace {

using SKKey = std::pair<std::int64_t, std::int64_t>; // (s, k)
using Coeffs = std::map<SKKey, Rational>;

void add_to(Coeffs &m, const SKKey &key, const Rational &v) {
  if (v.is_zero())
    return;
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero())
      m.erase(it);
  }
}

// Center index of the GGR induction basis at order n.
std::int64_t ggr_center(std::int64_t n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

std::int64_t ggr_kmin(std::int64_t n) { return n % 2 == 0 ? 0 : 1; }

// p(t) = ((t+1)^m - 2^m t^e) / (t-1).
LaurentPoly first_kind_quotient(std::int64_t m, std::int64_t e) {
  LaurentPoly t_plus_one = {{1, Rational(1)}, {0, Rational(1)}};
  LaurentPoly numer = sub(pow(t_plus_one, m), LaurentPoly::monomial(e, Rational(pow2(m))));
  return divide_by_t_minus_one(numer);
}

// Coefficients of q in powers of (u - 1): q(u) = sum_j a_j (u-1)^j.
std::vector<Rational> taylor_at_one(const LaurentPoly &q) {
  LaurentPoly shifted;
  LaurentPoly v_plus_one = {{1, Rational(1)}, {0, Rational(1)}};
  for (const auto &[e, c] : q.terms())
    shifted = add(shifted, scale(pow(v_plus_one, e), c));
  std::vector<Rational> out;
  if (shifted.is_zero())
    return out;
  out.resize(static_cast<std::size_t>(shifted.max_exponent()) + 1, Rational(0));
  for (const auto &[e, c] : shifted.terms())
    out[static_cast<std::size_t>(e)] = c;
  return out;
}

// ---- VARIANT: (s, power) -> weight for (t^s - 1)^power -------------------

using PowerRep = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

PowerRep variant_base() { return {{{1, 2}, Rational(1)}}; }

// r_{m+1} = r_m(t^2) - 2^m r_m(t), in the (t^s-1)^e basis.
PowerRep variant_step(const PowerRep &rep, std::int64_t m) {
  PowerRep next;
  Rational two_m(pow2(m));
  std::vector<Rational> taylor = taylor_at_one(first_kind_quotient(m, 0));
  for (const auto &[key, w] : rep) {
    auto [s, e] = key;
    if (e < m || e > 2 * m - 2)
      throw InvariantViolation("variant representation left the induction basis");
    if (e > m) {
      add_to(next, {checked_mul(2, s), e}, w);
      add_to(next, {s, e}, -(two_m * w));
      continue;
    }
    // (t^{2s}-1)^m - 2^m (t^s-1)^m = (t^s-1)^{m+1} p(t^s).
    for (std::size_t j = 0; j < taylor.size(); ++j)
      add_to(next, {s, m + 1 + static_cast<std::int64_t>(j)}, w * taylor[j]);
  }
  return next;
}

PowerRep variant_representation(std::int64_t n) {
  PowerRep rep = variant_base();
  for (std::int64_t m = 2; m < n; ++m)
    rep = variant_step(rep, m);
  return rep;
}

// ---- GGR: center weights per s plus shifted (s, k) weights ---------------

struct GgrRep {
  std::int64_t n = 1;
  std::map<std::int64_t, Rational> center; // s -> weight of [t^-kc (t-1)^n](t^s)
  Coeffs shifted;                          // (s, k) -> weight of [t^-k (t-1)^{n+1}](t^s)
};

GgrRep ggr_base() {
  GgrRep rep;
  rep.n = 1;
  rep.center.emplace(1, Rational(1));
  return rep;
}

// One induction step from the induction basis at order m to generator
// coordinates of V_{m+1}: (s, k) -> coefficient of t^{-sk}(t^s-1)^{m+1}.
Coeffs ggr_step(const GgrRep &rep) {
  const std::int64_t m = rep.n;
  const std::int64_t kc = ggr_center(m);
  Rational two_m(pow2(m));
  Coeffs g;

  // First kind: t^{-2kc}(t-1)^{m+1} p(t) with p = ((t+1)^m - 2^m t^kc)/(t-1).
  LaurentPoly p = first_kind_quotient(m, kc);
  for (const auto &[s, w] : rep.center)
    for (const auto &[i, pi] : p.terms())
      add_to(g, {s, 2 * kc - i}, w * pi);

  // Second kind: dilation of a V_{m+1} generator minus 2^m times itself.
  for (const auto &[key, w] : rep.shifted) {
    auto [s, k] = key;
    add_to(g, {checked_mul(2, s), k}, w);
    add_to(g, {s, k}, -(two_m * w));
  }
  return g;
}

// Generator coordinates of W_n (per s) to the induction basis at order n:
// sum_j a_j g_j = b g_center + sum_k c_k (g_{k-1} - g_k).
GgrRep ggr_to_induction_basis(const Coeffs &g, std::int64_t n) {
  const std::int64_t kmin = ggr_kmin(n);
  const std::int64_t center = ggr_center(n);
  std::map<std::int64_t, std::map<std::int64_t, Rational>> by_s;
  for (const auto &[key, v] : g) {
    auto [s, k] = key;
    if (k < kmin || k > n - 1)
      throw InvariantViolation("generator index outside the span space");
    by_s[s][k] = v;
  }

  GgrRep rep;
  rep.n = n;
  for (const auto &[s, a] : by_s) {
    Rational b = 0;
    for (const auto &[k, v] : a)
      b += v;
    Rational c = 0; // c_kmin
    for (std::int64_t j = kmin; j <= n - 1; ++j) {
      auto it = a.find(j);
      if (it != a.end())
        c += it->second;
      if (j == center)
        c -= b;
      if (j + 1 <= n - 1)
        add_to(rep.shifted, {s, j + 1}, c);
    }
    if (!c.is_zero())
      throw InvariantViolation("induction basis change did not telescope");
    if (!b.is_zero())
      rep.center.emplace(s, b);
  }
  return rep;
}

GgrRep ggr_representation(std::int64_t n) {
  GgrRep rep = ggr_base();
  for (std::int64_t m = 1; m < n; ++m)
    rep = ggr_to_induction_basis(ggr_step(rep), m + 1);
  return rep;
}

} // namespace

std::string_view to_string(CaseTag c) { return c == CaseTag::Ggr ? "ggr" : "variant"; }

CaseTag parse_case(std::string_view text) {
  if (text == "ggr")
    return CaseTag::Ggr;
  if (text == "variant")
    return CaseTag::Variant;
  throw std::invalid_argument("unknown case '" + std::string(text) + "' (expected ggr or variant)");
}

void require_supported(std::int64_t n, CaseTag c) {
  if (c == CaseTag::Ggr && n < 1)
    throw std::invalid_argument("GGR case requires n >= 1");
  if (c == CaseTag::Variant && n < 2)
    throw std::invalid_argument("variant case requires n >= 2");
}

std::vector<std::int64_t> admissible_k(std::int64_t n, CaseTag c) {
  require_supported(n, c);
  std::vector<std::int64_t> ks;
  if (c == CaseTag::Variant) {
    for (std::int64_t k = -(n - 2); k <= 0; ++k)
      ks.push_back(k);
    return ks;
  }
  if (n == 1)
    return {0};
  for (std::int64_t k = ggr_kmin(n); k <= n - 1; ++k)
    ks.push_back(k);
  return ks;
}

Certificate make_certificate(std::int64_t n, CaseTag c, const Coeffs &by_s_k) {
  Certificate cert;
  cert.n = n;
  cert.case_tag = c;
  for (const auto &[key, v] : by_s_k)
    if (!v.is_zero())
      cert.terms.push_back({key.second, key.first, v});
  return cert;
}

std::vector<Generator> generators(std::int64_t n, CaseTag c, std::int64_t s_max) {
  if (s_max < 1)
    throw std::invalid_argument("s_max must be positive");
  std::vector<std::int64_t> ks = admissible_k(n, c);
  std::vector<Generator> out;
  for (std::int64_t s = 1; s <= s_max; ++s)
    for (std::int64_t k : ks)
      out.push_back({k, s, LaurentPoly::generator(n, k, s)});
  return out;
}

LaurentPoly BasisElement::to_laurent() const {
  if (form == Form::Power)
    return substitute_power(LaurentPoly::t_minus_one_pow(power), s);
  return LaurentPoly::generator(power, k, s);
}

std::vector<BasisElement> basis_representation(std::int64_t n, CaseTag c) {
  require_supported(n, c);
  std::vector<BasisElement> out;
  if (c == CaseTag::Variant) {
    for (const auto &[key, w] : variant_representation(n))
      out.push_back({BasisElement::Form::Power, key.first, 0, key.second, w});
    return out;
  }
  GgrRep rep = ggr_representation(n);
  for (const auto &[s, w] : rep.center)
    out.push_back({BasisElement::Form::Shifted, s, ggr_center(n), n, w});
  for (const auto &[key, w] : rep.shifted)
    out.push_back({BasisElement::Form::Shifted, key.first, key.second, n + 1, w});
  return out;
}

LaurentPoly divide_by_t_minus_one(const LaurentPoly &p) {
  if (p.is_zero())
    return {};
  if (p.min_exponent() < 0)
    throw std::invalid_argument("synthetic division needs a polynomial without negative powers");
  // Horner from the top: q_{d-1} = a_d, q_{i-1} = a_i + q_i.
  LaurentPoly::Terms q;
  Rational carry = 0;
  for (Exponent e = p.max_exponent(); e >= 1; --e) {
    carry += p.coeff(e);
    if (!carry.is_zero())
      q.emplace(e - 1, carry);
  }
  Rational remainder = carry + p.coeff(0);
  if (!remainder.is_zero())
    throw InvariantViolation("division by (t-1) left remainder " + remainder.to_string());
  return LaurentPoly(std::move(q));
}

Certificate certify_inductive(std::int64_t n, CaseTag c) {
  require_supported(n, c);
  Coeffs by_s_k;
  if (c == CaseTag::Variant) {
    // (t^s-1)^{n+j} = (t^s-1)^n sum_i (-1)^{j-i} C(j,i) t^{si}, i.e. k = -i.
    for (const auto &[key, w] : variant_representation(n)) {
      auto [s, e] = key;
      std::int64_t j = e - n;
      for (std::int64_t i = 0; i <= j; ++i) {
        Integer b = binomial(j, i);
        if ((j - i) % 2 != 0)
          b = -b;
        add_to(by_s_k, {s, -i}, w * Rational(b));
      }
    }
  } else if (n == 1) {
    by_s_k.emplace(SKKey{1, 0}, Rational(1));
  } else {
    by_s_k = ggr_step(ggr_representation(n - 1));
  }

  Certificate cert = make_certificate(n, c, by_s_k);
  VerifyResult check = verify(cert);
  if (!check.ok)
    throw InvariantViolation("inductive certificate failed verification: " + check.diagnostic);
  return cert;
}

Certificate certify_solver(std::int64_t n, CaseTag c, const std::vector<std::int64_t> &s_candidates) {
  require_supported(n, c);
  std::set<std::int64_t> svals(s_candidates.begin(), s_candidates.end());
  if (svals.empty() || *svals.begin() < 1)
    throw std::invalid_argument("s candidates must be nonempty and positive");

  // Columns ordered by increasing s, then increasing |k|, so the pivots
  // (and hence the nonzero terms) land on the smallest generators.
  std::vector<std::int64_t> ks = admissible_k(n, c);
  std::stable_sort(ks.begin(), ks.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });
  std::vector<SKKey> keys;
  std::vector<LaurentPoly> columns;
  for (std::int64_t s : svals)
    for (std::int64_t k : ks) {
      keys.push_back({s, k});
      columns.push_back(LaurentPoly::generator(n, k, s));
    }

  auto solution = solve_in_span(columns, mz_polynomial(n));
  if (!solution) {
    std::ostringstream os;
    os << "r_" << n << " is not in the span of the " << to_string(c) << " generators with s in {";
    bool first = true;
    for (auto s : svals) {
      os << (first ? "" : ",") << s;
      first = false;
    }
    os << "}";
    throw InfeasibleError(os.str());
  }

  Coeffs by_s_k;
  for (std::size_t i = 0; i < keys.size(); ++i)
    add_to(by_s_k, keys[i], (*solution)[i]);
  Certificate cert = make_certificate(n, c, by_s_k);
  VerifyResult check = verify(cert);
  if (!check.ok)
    throw InvariantViolation("solver certificate failed verification: " + check.diagnostic);
  return cert;
}

std::vector<std::int64_t> power_of_two_candidates(std::int64_t s_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 1; s <= s_max; s *= 2) {
    out.push_back(s);
    if (s > s_max / 2)
      break;
  }
  return out;
}

Certificate certify_solver(std::int64_t n, CaseTag c) {
  require_supported(n, c);
  if (n > 62)
    throw std::invalid_argument("n too large for the default s range");
  std::int64_t s_max = std::int64_t{1} << (n - 1);
  try {
    return certify_solver(n, c, power_of_two_candidates(s_max));
  } catch (const InfeasibleError &) {
    std::vector<std::int64_t> all;
    for (std::int64_t s = 1; s <= s_max; ++s)
      all.push_back(s);
    return certify_solver(n, c, all);
  }
}

LaurentPoly expand(const Certificate &cert) {
  LaurentPoly total;
  for (const auto &t : cert.terms)
    total = add(total, scale(LaurentPoly::generator(cert.n, t.k, t.s), t.coeff));
  return total;
}

VerifyResult verify(const Certificate &cert) {
  VerifyResult result;
  try {
    require_supported(cert.n, cert.case_tag);
  } catch (const std::invalid_argument &e) {
    result.diagnostic = e.what();
    return result;
  }

  std::vector<std::int64_t> ks = admissible_k(cert.n, cert.case_tag);
  std::set<std::int64_t> allowed(ks.begin(), ks.end());
  std::set<SKKey> seen;
  for (const auto &t : cert.terms) {
    std::ostringstream os;
    if (t.s < 1)
      os << "term (k=" << t.k << ", s=" << t.s << ") has nonpositive s";
    else if (!allowed.count(t.k))
      os << "k=" << t.k << " is outside the " << to_string(cert.case_tag) << " range for n=" << cert.n;
    else if (t.coeff.is_zero())
      os << "term (k=" << t.k << ", s=" << t.s << ") has a zero coefficient";
    else if (!seen.insert({t.s, t.k}).second)
      os << "term (k=" << t.k << ", s=" << t.s << ") appears more than once";
    if (!os.str().empty()) {
      result.diagnostic = os.str();
      return result;
    }
  }

  result.difference = sub(expand(cert), mz_polynomial(cert.n));
  result.ok = result.difference.is_zero();
  if (!result.ok)
    result.diagnostic = "expansion minus r_" + std::to_string(cert.n) + " = " + result.difference.to_string();
  return result;
}

Rational moment_checksum(const Certificate &cert) {
  Rational total = 0;
  for (const auto &t : cert.terms)
    total += t.coeff * Rational(t.s).pow(cert.n);
  return total * Rational(factorial(cert.n));
}

Integer mz_leading_moment(std::int64_t n) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  Integer out = 1;
  Integer top = pow2(n);
  for (std::int64_t j = 1; j <= n - 1; ++j)
    out *= top - pow2(j);
  return out;
}

CertificateIdentity certificate_identity(const Certificate &cert) {
  VerifyResult check = verify(cert);
  if (!check.ok)
    throw std::invalid_argument("certificate does not verify: " + check.diagnostic);

  std::vector<SchemePart> parts;
  for (const auto &t : cert.terms)
    parts.push_back({t.coeff, t.s, ggr_difference(cert.n, t.k)});

  CertificateIdentity id;
  id.mz = mz_difference(cert.n);
  id.combined = linear_combination(parts);
  id.equal = id.mz == id.combined;

  std::ostringstream os;
  os << "R_" << cert.n << "(h) = ";
  bool first = true;
  for (const auto &t : cert.terms) {
    Rational mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (first)
      os << (t.coeff.sign() < 0 ? "-" : "");
    else
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    first = false;
    if (mag != Rational(1))
      os << mag << "*";
    os << "Delta_" << t.k << "(";
    if (t.s != 1)
      os << t.s;
    os << "h)";
  }
  id.text = os.str();
  return id;
}

} // namespace ggr
