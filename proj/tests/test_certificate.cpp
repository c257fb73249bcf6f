#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggr/certificate.hpp"
#include "ggr/certificate_json.hpp"
#include "ggr/linear_solve.hpp"
#include "support.hpp"

using namespace ggr;

namespace {

bool is_power_of_two(std::int64_t s) { return s > 0 && (s & (s - 1)) == 0; }

std::vector<std::int64_t> ks_of(const std::vector<Generator> &gens) {
  std::vector<std::int64_t> out;
  for (const auto &g : gens)
    out.push_back(g.k);
  return out;
}

} // namespace

TEST_CASE("admissible k ranges") {
  CHECK(admissible_k(1, CaseTag::Ggr) == std::vector<std::int64_t>{0});
  CHECK(admissible_k(2, CaseTag::Ggr) == std::vector<std::int64_t>{0, 1});
  CHECK(admissible_k(3, CaseTag::Ggr) == std::vector<std::int64_t>{1, 2});
  CHECK(admissible_k(4, CaseTag::Ggr) == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(admissible_k(2, CaseTag::Variant) == std::vector<std::int64_t>{0});
  CHECK(admissible_k(4, CaseTag::Variant) == std::vector<std::int64_t>{-2, -1, 0});
  CHECK_THROWS_AS(admissible_k(0, CaseTag::Ggr), std::invalid_argument);
  CHECK_THROWS_AS(admissible_k(1, CaseTag::Variant), std::invalid_argument);
}

TEST_CASE("case tags") {
  CHECK(parse_case("ggr") == CaseTag::Ggr);
  CHECK(parse_case("variant") == CaseTag::Variant);
  CHECK(to_string(CaseTag::Variant) == "variant");
  CHECK_THROWS_AS(parse_case("GGR"), std::invalid_argument);
}

TEST_CASE("generators") {
  auto g2 = generators(2, CaseTag::Ggr, 1);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].k == 0);
  CHECK(g2[0].poly == LaurentPoly::t_minus_one_pow(2));
  CHECK(g2[1].k == 1);
  CHECK(g2[1].poly == mul(LaurentPoly::monomial(-1), LaurentPoly::t_minus_one_pow(2)));

  CHECK(ks_of(generators(3, CaseTag::Ggr, 1)) == std::vector<std::int64_t>{1, 2});

  auto v3 = generators(3, CaseTag::Variant, 1);
  REQUIRE(v3.size() == 2);
  CHECK(v3[0].k == -1);
  CHECK(v3[0].poly == mul(LaurentPoly::monomial(1), LaurentPoly::t_minus_one_pow(3)));
  CHECK(v3[1].k == 0);
  CHECK(v3[1].poly == LaurentPoly::t_minus_one_pow(3));

  auto dilated = generators(2, CaseTag::Ggr, 3);
  CHECK(dilated.size() == 6);
  CHECK(dilated.back().s == 3);
  CHECK(dilated.back().poly == LaurentPoly::generator(2, 1, 3));
  CHECK_THROWS_AS(generators(1, CaseTag::Variant, 1), std::invalid_argument);
  CHECK_THROWS_AS(generators(2, CaseTag::Ggr, 0), std::invalid_argument);
}

TEST_CASE("synthetic division by t - 1") {
  LaurentPoly t2_minus_1 = {{2, Rational(1)}, {0, Rational(-1)}};
  CHECK(divide_by_t_minus_one(t2_minus_1) == LaurentPoly{{1, Rational(1)}, {0, Rational(1)}});
  for (int n = 1; n <= 8; ++n)
    CHECK(divide_by_t_minus_one(LaurentPoly::t_minus_one_pow(n)) == LaurentPoly::t_minus_one_pow(n - 1));
  CHECK(divide_by_t_minus_one(LaurentPoly{}).is_zero());
  CHECK_THROWS_AS(divide_by_t_minus_one(LaurentPoly::monomial(2)), InvariantViolation);
  CHECK_THROWS_AS(divide_by_t_minus_one(LaurentPoly::monomial(-1)), std::invalid_argument);
}

TEST_CASE("basis representations expand to r_n") {
  for (int n = 1; n <= 10; ++n) {
    auto rep = basis_representation(n, CaseTag::Ggr);
    LaurentPoly sum;
    const std::int64_t center = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    for (const auto &e : rep) {
      CHECK(e.form == BasisElement::Form::Shifted);
      CHECK(is_power_of_two(e.s));
      if (e.power == n) {
        CHECK(e.k == center);
      } else {
        CHECK(e.power == n + 1);
        CHECK(e.k >= (n % 2 == 0 ? 1 : 2));
        CHECK(e.k <= n - 1);
      }
      sum = add(sum, scale(e.to_laurent(), e.weight));
    }
    CHECK(sum == mz_polynomial(n));
  }
  for (int n = 2; n <= 10; ++n) {
    auto rep = basis_representation(n, CaseTag::Variant);
    LaurentPoly sum;
    for (const auto &e : rep) {
      CHECK(e.form == BasisElement::Form::Power);
      CHECK(e.power >= n);
      CHECK(e.power <= 2 * n - 2);
      sum = add(sum, scale(e.to_laurent(), e.weight));
    }
    CHECK(sum == mz_polynomial(n));
  }
}

TEST_CASE("certify_inductive small cases") {
  Certificate g1 = certify_inductive(1, CaseTag::Ggr);
  CHECK(g1.terms == std::vector<CertTerm>{{0, 1, Rational(1)}});

  Certificate v2 = certify_inductive(2, CaseTag::Variant);
  CHECK(v2.terms == std::vector<CertTerm>{{0, 1, Rational(1)}});

  Certificate g2 = certify_inductive(2, CaseTag::Ggr);
  CHECK(g2.terms == std::vector<CertTerm>{{0, 1, Rational(1)}});

  Certificate g3 = certify_inductive(3, CaseTag::Ggr);
  CHECK(verify(g3).ok);
  for (const auto &t : g3.terms) {
    CHECK((t.k == 1 || t.k == 2));
    CHECK(is_power_of_two(t.s));
  }

  CHECK_THROWS_AS(certify_inductive(0, CaseTag::Ggr), std::invalid_argument);
  CHECK_THROWS_AS(certify_inductive(1, CaseTag::Variant), std::invalid_argument);
}

TEST_CASE("certificates are sorted by (s, k) with distinct pairs") {
  for (auto c : {CaseTag::Ggr, CaseTag::Variant})
    for (int n = 2; n <= 10; ++n) {
      Certificate cert = certify_inductive(n, c);
      for (std::size_t i = 1; i < cert.terms.size(); ++i) {
        const auto &a = cert.terms[i - 1], &b = cert.terms[i];
        CHECK(std::pair(a.s, a.k) < std::pair(b.s, b.k));
      }
    }
}

TEST_CASE("exact span solver") {
  LaurentPoly a = {{0, Rational(1)}};
  LaurentPoly b = {{1, Rational(1)}};
  LaurentPoly ab = add(a, b);
  // Columns: a, a+b (dependent later column b is never needed).
  auto x = solve_in_span({a, ab, b}, LaurentPoly{{0, Rational(2)}, {1, Rational(3)}});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(-1));
  CHECK((*x)[1] == Rational(3));
  CHECK((*x)[2] == Rational(0));
  CHECK_FALSE(solve_in_span({a}, b).has_value());
  auto zero = solve_in_span({a, b}, LaurentPoly{});
  REQUIRE(zero.has_value());
  CHECK((*zero)[0].is_zero());
}

TEST_CASE("property: span solver returns exact solutions") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> cols(1, 6);
  for (int i = 0; i < ggr::testing::kPropertyRuns; ++i) {
    std::vector<LaurentPoly> columns;
    for (int j = cols(rng); j > 0; --j)
      columns.push_back(ggr::testing::random_poly(rng, 4, 4));
    LaurentPoly target;
    for (const auto &col : columns)
      target = add(target, scale(col, ggr::testing::random_rational(rng)));
    auto x = solve_in_span(columns, target);
    REQUIRE(x.has_value());
    LaurentPoly rebuilt;
    for (std::size_t j = 0; j < columns.size(); ++j)
      rebuilt = add(rebuilt, scale(columns[j], (*x)[j]));
    CHECK(rebuilt == target);
  }
}

TEST_CASE("certify_solver") {
  Certificate s1 = certify_solver(2, CaseTag::Ggr, {1});
  CHECK(s1.terms == std::vector<CertTerm>{{0, 1, Rational(1)}});

  Certificate s12 = certify_solver(2, CaseTag::Ggr, {1, 2});
  CHECK(verify(s12).ok);
  CHECK(s12.terms == std::vector<CertTerm>{{0, 1, Rational(1)}});

  Certificate s9 = certify_solver(9, CaseTag::Ggr, power_of_two_candidates(256));
  CHECK(verify(s9).ok);

  CHECK_THROWS_AS(certify_solver(3, CaseTag::Ggr, {1}), InfeasibleError);
  CHECK_THROWS_AS(certify_solver(3, CaseTag::Ggr, {}), std::invalid_argument);
  CHECK_THROWS_AS(certify_solver(3, CaseTag::Ggr, {0, 1}), std::invalid_argument);

  CHECK(power_of_two_candidates(1) == std::vector<std::int64_t>{1});
  CHECK(power_of_two_candidates(10) == std::vector<std::int64_t>{1, 2, 4, 8});
}

TEST_CASE("cross-oracle: both strategies verify for n = 2..8") {
  for (auto c : {CaseTag::Ggr, CaseTag::Variant})
    for (int n = 2; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(verify(certify_inductive(n, c)).ok);
      CHECK(verify(certify_solver(n, c)).ok);
    }
}

TEST_CASE("verify rejects bad certificates with a diagnostic") {
  Certificate cert{2, CaseTag::Ggr, {{0, 1, Rational(1)}}};
  CHECK(verify(cert).ok);

  Certificate wrong = cert;
  wrong.terms[0].coeff = Rational(2);
  VerifyResult r = verify(wrong);
  CHECK_FALSE(r.ok);
  CHECK(r.difference == LaurentPoly::t_minus_one_pow(2));
  CHECK(r.diagnostic.find("t^2 - 2*t + 1") != std::string::npos);

  Certificate odd_zero{3, CaseTag::Ggr, {{0, 1, Rational(1)}}};
  CHECK_FALSE(verify(odd_zero).ok);
  CHECK(verify(odd_zero).diagnostic.find("outside") != std::string::npos);

  Certificate variant_pos{3, CaseTag::Variant, {{1, 1, Rational(1)}}};
  CHECK_FALSE(verify(variant_pos).ok);

  Certificate dup{2, CaseTag::Ggr, {{0, 1, Rational(1, 2)}, {0, 1, Rational(1, 2)}}};
  CHECK_FALSE(verify(dup).ok);

  Certificate zero_coeff{2, CaseTag::Ggr, {{0, 1, Rational(1)}, {1, 1, Rational(0)}}};
  CHECK_FALSE(verify(zero_coeff).ok);

  Certificate bad_s{2, CaseTag::Ggr, {{0, 0, Rational(1)}}};
  CHECK_FALSE(verify(bad_s).ok);

  Certificate bad_n{0, CaseTag::Ggr, {}};
  CHECK_FALSE(verify(bad_n).ok);
}

TEST_CASE("certificate_identity") {
  CertificateIdentity id2 = certificate_identity(certify_inductive(2, CaseTag::Ggr));
  CHECK(id2.equal);
  CHECK(id2.text == "R_2(h) = Delta_0(h)");
  CHECK(id2.combined.terms() == mz_difference(2).terms());

  CertificateIdentity id1 = certificate_identity(certify_inductive(1, CaseTag::Ggr));
  CHECK(id1.equal);
  CHECK(id1.text == "R_1(h) = Delta_0(h)");
  CHECK(id1.combined.order_hint() == 1);

  CHECK(certificate_identity(certify_inductive(5, CaseTag::Ggr)).equal);
  CHECK(certificate_identity(certify_solver(5, CaseTag::Variant)).equal);

  Certificate wrong{2, CaseTag::Ggr, {{0, 1, Rational(2)}}};
  CHECK_THROWS_AS(certificate_identity(wrong), std::invalid_argument);
}

TEST_CASE("moment checksum") {
  CHECK(mz_leading_moment(1) == 1);
  CHECK(mz_leading_moment(2) == 2);
  CHECK(mz_leading_moment(6) == Integer(62 * 60 * 56 * 48 * 32));
  for (auto c : {CaseTag::Ggr, CaseTag::Variant})
    for (int n = 2; n <= 10; ++n)
      CHECK(moment_checksum(certify_inductive(n, c)) == Rational(mz_leading_moment(n)));
}

TEST_CASE("certificate JSON") {
  const std::string expected = R"({
  "n": 2,
  "case": "ggr",
  "terms": [
    {
      "k": 0,
      "s": 1,
      "coeff": "1"
    }
  ],
  "generator_convention": "t^(-s*k)*(t^s-1)^n",
  "target": "r_n"
}
)";
  CHECK(dump_certificate(certify_inductive(2, CaseTag::Ggr)) == expected);

  Certificate fractional{3, CaseTag::Ggr, {{2, 1, Rational(-3, 2)}, {1, 1, Rational(5)}}};
  auto doc = to_json(fractional);
  CHECK(doc["terms"][0]["k"] == 1);
  CHECK(doc["terms"][1]["coeff"] == "-3/2");

  for (auto c : {CaseTag::Ggr, CaseTag::Variant})
    for (int n = 2; n <= 9; ++n) {
      Certificate cert = certify_inductive(n, c);
      CHECK(parse_certificate(dump_certificate(cert)) == cert);
    }
}

TEST_CASE("malformed certificate JSON names the field") {
  auto field_of = [](const std::string &text) {
    try {
      parse_certificate(text);
    } catch (const CertificateFormatError &e) {
      return e.field();
    }
    return std::string("<accepted>");
  };
  const std::string tail = R"j("generator_convention": "t^(-s*k)*(t^s-1)^n", "target": "r_n")j";
  CHECK(field_of("{") == "");
  CHECK(field_of("[]") == "");
  CHECK(field_of(R"j({"case": "ggr", "terms": [], )j" + tail + "}") == "n");
  CHECK(field_of(R"j({"n": "2", "case": "ggr", "terms": [], )j" + tail + "}") == "n");
  CHECK(field_of(R"j({"n": 2, "case": "GGR", "terms": [], )j" + tail + "}") == "case");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": {}, )j" + tail + "}") == "terms");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [{"k": 0, "s": 1}], )j" + tail + "}") == "terms[0].coeff");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [{"k": 0, "s": 1, "coeff": "0.5"}], )j" + tail + "}") ==
        "terms[0].coeff");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [{"k": 0, "s": 1, "coeff": "1/0"}], )j" + tail + "}") ==
        "terms[0].coeff");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [], "generator_convention": "d_k(t^s)", "target": "r_n"})j") ==
        "generator_convention");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [], "generator_convention": "t^(-s*k)*(t^s-1)^n", "target": "R_n"})j") ==
        "target");
  CHECK(field_of(R"j({"n": 2, "case": "ggr", "terms": [], )j" + tail + "}") == "<accepted>");
}
