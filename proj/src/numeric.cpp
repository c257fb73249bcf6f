#include "ggr/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ggr {

double to_double(const Number &x) {
  return std::visit(
      [](const auto &v) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
          return v.to_double();
        else
          return v;
      },
      x);
}

bool is_exact(const Number &x) { return std::holds_alternative<Rational>(x); }

std::string to_string(const Number &x) {
  if (const auto *r = std::get_if<Rational>(&x))
    return r->to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(x));
  return buf;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

double parse_double(std::string_view text, std::string_view what) {
  try {
    return Rational::parse(text).to_double();
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
}

} // namespace

TestFunction::TestFunction(Kind kind) : kind_(std::move(kind)) {}

TestFunction TestFunction::parse(std::string_view spec) {
  std::string_view name = spec;
  std::string_view args;
  bool has_args = false;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    args = spec.substr(colon + 1);
    has_args = true;
  }

  if (name == "poly") {
    if (!has_args || args.empty())
      throw std::invalid_argument("poly needs coefficients, e.g. poly:0,0,1");
    PolyFn p;
    for (auto part : split(args, ','))
      p.coeffs.push_back(Rational::parse(part));
    return TestFunction(p);
  }
  if (name == "exp" || name == "sin") {
    if (has_args)
      throw std::invalid_argument(std::string(name) + " takes no parameters");
    return name == "exp" ? TestFunction(ExpFn{}) : TestFunction(SinFn{});
  }
  if (name == "abs_pow") {
    double alpha = parse_double(args, "abs_pow exponent");
    if (!has_args || !(alpha > 0))
      throw std::invalid_argument("abs_pow needs an exponent > 0, e.g. abs_pow:3.5");
    return TestFunction(AbsPowFn{alpha});
  }
  if (name == "osc") {
    auto parts = split(args, ',');
    if (!has_args || parts.size() != 2)
      throw std::invalid_argument("osc needs m,p, e.g. osc:3,1");
    Rational m = Rational::parse(parts[0]);
    if (!m.is_integer() || m.sign() < 0)
      throw std::invalid_argument("osc m must be a nonnegative integer");
    double p = parse_double(parts[1], "osc p");
    if (!(p > 0))
      throw std::invalid_argument("osc p must be > 0");
    return TestFunction(OscFn{m.numerator().get_si(), p});
  }
  throw std::invalid_argument("unknown function '" + std::string(name) +
                              "' (expected poly, exp, sin, abs_pow or osc)");
}

double TestFunction::operator()(double x) const {
  struct Eval {
    double x;
    double operator()(const PolyFn &p) const {
      double acc = 0;
      for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + it->to_double();
      return acc;
    }
    double operator()(const ExpFn &) const { return std::exp(x); }
    double operator()(const SinFn &) const { return std::sin(x); }
    double operator()(const AbsPowFn &a) const { return std::pow(std::abs(x), a.alpha); }
    double operator()(const OscFn &o) const {
      if (x == 0.0)
        return 0.0;
      return std::pow(x, static_cast<double>(o.m)) * std::sin(std::pow(std::abs(x), -o.p));
    }
  };
  return std::visit(Eval{x}, kind_);
}

Rational TestFunction::operator()(const Rational &x) const {
  const auto *p = std::get_if<PolyFn>(&kind_);
  if (!p)
    throw std::logic_error("exact evaluation is only available for polynomials");
  Rational acc = 0;
  for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string TestFunction::describe() const {
  struct Name {
    std::string operator()(const PolyFn &p) const {
      std::string s = "poly:";
      for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        s += (i ? "," : "") + p.coeffs[i].to_string();
      return s;
    }
    std::string operator()(const ExpFn &) const { return "exp"; }
    std::string operator()(const SinFn &) const { return "sin"; }
    std::string operator()(const AbsPowFn &a) const { return "abs_pow:" + to_string(Number(a.alpha)); }
    std::string operator()(const OscFn &o) const {
      return "osc:" + std::to_string(o.m) + "," + to_string(Number(o.p));
    }
  };
  return std::visit(Name{}, kind_);
}

namespace {

Number exact_quotient(const DifferenceScheme &d, const TestFunction &f, const Rational &c, const Rational &h) {
  Rational sum = apply_scheme(d, [&](Node b) { return f(c + Rational(b) * h); });
  return sum / h.pow(d.order_hint());
}

struct FloatEval {
  double q;
  double error_bound;
};

FloatEval float_quotient(const DifferenceScheme &d, const TestFunction &f, double c, double h) {
  double sum = 0;
  double ulps = 0;
  for (const auto &t : d.terms()) {
    double coeff = t.coeff.to_double();
    double fx = f(c + static_cast<double>(t.node) * h);
    sum += coeff * fx;
    ulps += std::abs(coeff) * std::abs(fx) * std::numeric_limits<double>::epsilon();
  }
  double scale = std::pow(std::abs(h), static_cast<double>(d.order_hint()));
  return {sum / std::pow(h, static_cast<double>(d.order_hint())), ulps / scale};
}

void check_quotient_args(const DifferenceScheme &d, const Number &h) {
  if (d.order_hint() < 1)
    throw std::invalid_argument("scheme order must be at least 1");
  if (to_double(h) == 0.0 && (!is_exact(h) || std::get<Rational>(h).is_zero()))
    throw std::invalid_argument("step h must be nonzero");
}

} // namespace

Number quotient(const DifferenceScheme &d, const TestFunction &f, const Number &c, const Number &h) {
  check_quotient_args(d, h);
  if (f.is_poly() && is_exact(c) && is_exact(h))
    return exact_quotient(d, f, std::get<Rational>(c), std::get<Rational>(h));
  return float_quotient(d, f, to_double(c), to_double(h)).q;
}

QuotientTable quotient_table(const DifferenceScheme &d, const TestFunction &f, const Number &c,
                             const Number &h0, const Number &ratio, std::int64_t steps) {
  if (steps < 1)
    throw std::invalid_argument("steps must be at least 1");
  if (!(to_double(h0) > 0))
    throw std::invalid_argument("h0 must be positive");
  double r = to_double(ratio);
  if (!(r > 0 && r < 1))
    throw std::invalid_argument("ratio must lie in (0, 1)");

  QuotientTable table;
  table.scheme = d;
  table.center = c;
  table.order = d.order_hint();
  table.exact = f.is_poly() && is_exact(c) && is_exact(h0) && is_exact(ratio);

  for (std::int64_t i = 0; i < steps; ++i) {
    QuotientRow row;
    if (table.exact) {
      Rational h = std::get<Rational>(h0) * std::get<Rational>(ratio).pow(i);
      row.h = h;
      row.q = quotient(d, f, c, h);
    } else {
      double h = to_double(h0) * std::pow(r, static_cast<double>(i));
      check_quotient_args(d, h);
      FloatEval ev = float_quotient(d, f, to_double(c), h);
      row.h = h;
      row.q = ev.q;
      row.error_bound = ev.error_bound;
      row.reliable = !(d.order_hint() >= kUnreliableOrder && h < kUnreliableStep);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

nlohmann::ordered_json number_json(const Number &x) {
  if (const auto *r = std::get_if<Rational>(&x))
    return r->to_string();
  return std::get<double>(x);
}

} // namespace

nlohmann::ordered_json QuotientTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["scheme"] = scheme.to_string();
  doc["order"] = order;
  doc["c"] = number_json(center);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &row : rows) {
    nlohmann::ordered_json r;
    r["h"] = number_json(row.h);
    r["q"] = number_json(row.q);
    if (!exact) {
      r["reliable"] = row.reliable;
      r["error_bound"] = row.error_bound;
    }
    arr.push_back(std::move(r));
  }
  doc["rows"] = std::move(arr);
  doc["exact"] = exact;
  return doc;
}

DemoReport demo_ggr(std::int64_t n, const TestFunction &f, const Number &c, const DemoOptions &opts) {
  if (n < 2)
    throw std::invalid_argument("demo requires n >= 2");

  DemoReport report;
  report.n = n;
  report.case_tag = opts.case_tag;
  report.function = f.describe();
  report.center = c;
  report.certificate = certify_inductive(n, opts.case_tag);

  for (std::int64_t k : admissible_k(n, opts.case_tag))
    report.tables.push_back({"Delta_" + std::to_string(k), Rational(1),
                             quotient_table(ggr_difference(n, k), f, c, opts.h0, opts.ratio, opts.steps)});

  Rational mz_norm = Rational(mz_leading_moment(n)) / Rational(factorial(n));
  report.tables.push_back({"R_" + std::to_string(n), mz_norm,
                           quotient_table(mz_difference(n), f, c, opts.h0, opts.ratio, opts.steps)});
  CertificateIdentity id = certificate_identity(report.certificate);
  report.tables.push_back({"certified combination", mz_norm,
                           quotient_table(id.combined, f, c, opts.h0, opts.ratio, opts.steps)});

  report.exact = report.tables.front().table.exact;
  report.agree = true;
  if (report.exact) {
    const Rational ref = std::get<Rational>(report.tables.front().table.rows.back().q);
    for (const auto &lt : report.tables) {
      Rational q = std::get<Rational>(lt.table.rows.back().q) / lt.normalizer;
      if (q != ref)
        report.agree = false;
    }
  } else {
    const double ref = to_double(report.tables.front().table.rows.back().q);
    for (const auto &lt : report.tables) {
      double q = to_double(lt.table.rows.back().q) / lt.normalizer.to_double();
      if (!(std::abs(q - ref) <= opts.tolerance * std::max(1.0, std::abs(ref))))
        report.agree = false;
    }
  }
  return report;
}

std::string DemoReport::to_text() const {
  std::ostringstream os;
  os << "n = " << n << ", case = " << to_string(case_tag) << ", f = " << function
     << ", c = " << ggr::to_string(center) << (exact ? " (exact channel)" : " (float channel)") << "\n";
  os << "identity: " << certificate_identity(certificate).text << "\n";
  for (const auto &lt : tables) {
    os << "\n" << lt.label << ": " << lt.table.scheme.to_string();
    if (lt.normalizer != Rational(1))
      os << "   [limit / " << lt.normalizer << "]";
    os << "\n";
    char buf[160];
    for (const auto &row : lt.table.rows) {
      std::snprintf(buf, sizeof buf, "  h = %-24s q = %-28s", ggr::to_string(row.h).c_str(),
                    ggr::to_string(row.q).c_str());
      os << buf;
      if (!lt.table.exact) {
        std::snprintf(buf, sizeof buf, " err <= %.2e", row.error_bound);
        os << buf;
        if (!row.reliable)
          os << "  UNRELIABLE";
      }
      os << "\n";
    }
  }
  os << "\nnormalized smallest-h quotients " << (agree ? "agree" : "DISAGREE") << "\n";
  return os.str();
}

nlohmann::ordered_json DemoReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["case"] = std::string(to_string(case_tag));
  doc["function"] = function;
  doc["c"] = number_json(center);
  doc["identity"] = certificate_identity(certificate).text;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &lt : tables) {
    nlohmann::ordered_json t = lt.table.to_json();
    t["label"] = lt.label;
    t["normalizer"] = lt.normalizer.to_string();
    arr.push_back(std::move(t));
  }
  doc["tables"] = std::move(arr);
  doc["exact"] = exact;
  doc["agree"] = agree;
  return doc;
}

} // namespace ggr
