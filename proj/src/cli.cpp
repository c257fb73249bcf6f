#include "ggr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ggr/certificate.hpp"
#include "ggr/certificate_json.hpp"
#include "ggr/numeric.hpp"

namespace ggr::cli {

namespace {

struct CliConfig {
  std::string subcommand;
  long n = 0;
  std::string case_name = "ggr";
  std::string strategy = "inductive";
  std::optional<long> s_max;
  std::string format;
  std::string out_path;
  std::string in_path;
  std::string fn;
  std::string c = "0";
  std::string h0 = "0.1";
  std::string ratio = "0.5";
  long steps = 8;
  bool allow_large = false;
};

/// Usage error carrying its one-line reason.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_n(const CliConfig &cfg, long min_n) {
  if (cfg.n < min_n)
    throw UsageError("--n must be at least " + std::to_string(min_n));
  if (!cfg.allow_large && cfg.n > kDefaultMaxN)
    throw UsageError("--n above " + std::to_string(kDefaultMaxN) + " needs --allow-large");
}

CaseTag case_of(const CliConfig &cfg) {
  try {
    return parse_case(cfg.case_name);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

Rational parse_number(const std::string &text, const std::string &flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void emit(const CliConfig &cfg, const std::string &payload, std::ostream &out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot open '" + cfg.out_path + "' for writing");
  file << payload;
}

std::string read_input(const CliConfig &cfg, std::istream &in) {
  std::ostringstream buf;
  if (cfg.in_path.empty() || cfg.in_path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(cfg.in_path, std::ios::binary);
    if (!file)
      throw UsageError("cannot open '" + cfg.in_path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string certificate_text(const Certificate &cert) {
  std::ostringstream os;
  os << "n = " << cert.n << ", case = " << to_string(cert.case_tag) << ", " << cert.terms.size()
     << " terms\n";
  os << "r_" << cert.n << "(t) = sum coeff * t^(-s*k) * (t^s - 1)^" << cert.n << "\n";
  for (const auto &t : cert.terms)
    os << "  k = " << t.k << ", s = " << t.s << ", coeff = " << t.coeff << "\n";
  os << certificate_identity(cert).text << "\n";
  return os.str();
}

int run_certify(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
  CaseTag c = case_of(cfg);
  check_n(cfg, c == CaseTag::Ggr ? 1 : 2);
  if (cfg.strategy != "inductive" && cfg.strategy != "solver")
    throw UsageError("--strategy must be inductive or solver");
  if (cfg.format != "json" && cfg.format != "text")
    throw UsageError("--format must be json or text");

  Certificate cert;
  try {
    if (cfg.strategy == "inductive") {
      cert = certify_inductive(cfg.n, c);
    } else if (!cfg.s_max) {
      cert = certify_solver(cfg.n, c);
    } else {
      if (*cfg.s_max < 1)
        throw UsageError("--s-max must be positive");
      try {
        cert = certify_solver(cfg.n, c, power_of_two_candidates(*cfg.s_max));
      } catch (const InfeasibleError &) {
        std::vector<std::int64_t> all;
        for (long s = 1; s <= *cfg.s_max; ++s)
          all.push_back(s);
        cert = certify_solver(cfg.n, c, all);
      }
    }
  } catch (const InfeasibleError &e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  }

  VerifyResult check = verify(cert);
  if (!check.ok) {
    err << "internal error: generated certificate does not verify: " << check.diagnostic << "\n";
    return kInternal;
  }
  emit(cfg, cfg.format == "json" ? dump_certificate(cert) : certificate_text(cert), out);
  return kOk;
}

int run_verify(const CliConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
  if (cfg.format != "text" && cfg.format != "json")
    throw UsageError("--format must be json or text");
  Certificate cert;
  try {
    cert = parse_certificate(read_input(cfg, in));
  } catch (const CertificateFormatError &e) {
    err << "malformed certificate: " << e.what() << "\n";
    return kUsage;
  }

  VerifyResult check = verify(cert);
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = cert.n;
    doc["case"] = std::string(to_string(cert.case_tag));
    doc["ok"] = check.ok;
    doc["difference"] = check.difference.to_string();
    doc["diagnostic"] = check.diagnostic;
    payload = doc.dump(2) + "\n";
  } else if (check.ok) {
    payload = "OK: " + certificate_identity(cert).text + "\n";
  } else {
    payload = "FAILED: " + check.diagnostic + "\n";
  }
  emit(cfg, payload, out);
  if (!check.ok)
    err << "verification failed: " << check.diagnostic << "\n";
  return check.ok ? kOk : kRejected;
}

int run_moments(const CliConfig &cfg, std::ostream &out) {
  CaseTag c = case_of(cfg);
  check_n(cfg, c == CaseTag::Ggr ? 1 : 2);
  if (cfg.format != "json" && cfg.format != "text")
    throw UsageError("--format must be json or text");

  const std::int64_t n = cfg.n;
  const Rational n_fact(factorial(n));
  const Rational mz_expected(mz_leading_moment(n));
  bool all_ok = true;

  struct Row {
    std::string label;
    std::vector<Rational> moments;
    Rational expected;
    bool ok;
  };
  std::vector<Row> rows;
  auto add_row = [&](std::string label, const LaurentPoly &p, const Rational &expected) {
    Row row{std::move(label), {}, expected, true};
    for (std::int64_t m = 0; m <= n; ++m) {
      Rational v = theta_moment(p, m);
      row.ok = row.ok && (m < n ? v.is_zero() : v == expected);
      row.moments.push_back(std::move(v));
    }
    all_ok = all_ok && row.ok;
    rows.push_back(std::move(row));
  };
  for (std::int64_t k : admissible_k(n, c))
    add_row("d_" + std::to_string(k), LaurentPoly::generator(n, k, 1), n_fact);
  add_row("r_" + std::to_string(n), mz_polynomial(n), mz_expected);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["case"] = std::string(to_string(c));
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
      nlohmann::ordered_json r;
      r["label"] = row.label;
      nlohmann::ordered_json ms = nlohmann::ordered_json::array();
      for (const auto &m : row.moments)
        ms.push_back(m.to_string());
      r["moments"] = std::move(ms);
      r["expected_order_n"] = row.expected.to_string();
      r["ok"] = row.ok;
      arr.push_back(std::move(r));
    }
    doc["schemes"] = std::move(arr);
    doc["ok"] = all_ok;
    os << doc.dump(2) << "\n";
  } else {
    os << "theta_m for m = 0.." << n << " (order-n targets: d_k -> " << n_fact << ", r_" << n << " -> "
       << mz_expected << ")\n";
    for (const auto &row : rows) {
      os << "  " << row.label << ":";
      for (const auto &m : row.moments)
        os << " " << m;
      os << (row.ok ? "  ok" : "  MISMATCH") << "\n";
    }
    os << (all_ok ? "all moment conditions hold\n" : "moment conditions FAILED\n");
  }
  emit(cfg, os.str(), out);
  return all_ok ? kOk : kRejected;
}

int run_demo(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.fn.empty())
    throw UsageError("demo needs --fn");
  CaseTag c = case_of(cfg);
  check_n(cfg, 2);
  if (cfg.format != "json" && cfg.format != "text")
    throw UsageError("--format must be json or text");

  std::optional<TestFunction> f;
  try {
    f = TestFunction::parse(cfg.fn);
  } catch (const std::invalid_argument &e) {
    err << "bad --fn: " << e.what() << "\n";
    return kUsage;
  }
  DemoOptions opts;
  opts.case_tag = c;
  opts.h0 = parse_number(cfg.h0, "--h0");
  opts.ratio = parse_number(cfg.ratio, "--ratio");
  opts.steps = cfg.steps;
  if (!(to_double(opts.h0) > 0))
    throw UsageError("--h0 must be positive");
  double r = to_double(opts.ratio);
  if (!(r > 0 && r < 1))
    throw UsageError("--ratio must lie in (0, 1)");
  if (opts.steps < 1)
    throw UsageError("--steps must be at least 1");

  DemoReport report = demo_ggr(cfg.n, *f, parse_number(cfg.c, "--c"), opts);
  emit(cfg, cfg.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(), out);
  return kOk;
}

int run_render(const CliConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
  if (cfg.format != "json" && cfg.format != "text")
    throw UsageError("--format must be json or text");

  if (cfg.n == 0 || !cfg.in_path.empty()) {
    Certificate cert;
    try {
      cert = parse_certificate(read_input(cfg, in));
    } catch (const CertificateFormatError &e) {
      err << "malformed certificate: " << e.what() << "\n";
      return kUsage;
    }
    VerifyResult check = verify(cert);
    if (!check.ok) {
      err << "verification failed: " << check.diagnostic << "\n";
      return kRejected;
    }
    CertificateIdentity id = certificate_identity(cert);
    if (cfg.format == "json") {
      nlohmann::ordered_json doc;
      doc["identity"] = id.text;
      doc["lhs"] = id.mz.to_string();
      doc["rhs"] = id.combined.to_string();
      doc["equal"] = id.equal;
      emit(cfg, doc.dump(2) + "\n", out);
    } else {
      emit(cfg, id.text + "\n  lhs: " + id.mz.to_string() + "\n  rhs: " + id.combined.to_string() + "\n", out);
    }
    return id.equal ? kOk : kInternal;
  }

  check_n(cfg, 1);
  LaurentPoly r = mz_polynomial(cfg.n);
  DifferenceScheme d = mz_difference(cfg.n);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = cfg.n;
    doc["r_n"] = r.to_string();
    doc["R_n"] = d.to_string();
    emit(cfg, doc.dump(2) + "\n", out);
  } else {
    std::string n = std::to_string(cfg.n);
    emit(cfg, "r_" + n + "(t) = " + r.to_string() + "\nR_" + n + "(h) = " + d.to_string() + "\n", out);
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Certificates for R_n as a combination of dilated generalized Riemann differences"};
  app.name("ggr");
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_n = [&](CLI::App *sub, bool required) {
    auto *opt = sub->add_option("--n", cfg.n, "Order n");
    if (required)
      opt->required();
    sub->add_flag("--allow-large", cfg.allow_large, "Lift the default cap on n");
  };
  auto add_case = [&](CLI::App *sub) { sub->add_option("--case", cfg.case_name, "ggr or variant"); };
  auto add_io = [&](CLI::App *sub, const char *default_format) {
    cfg.format.clear();
    sub->add_option("--format", cfg.format, "text or json")->default_str(default_format);
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  };

  auto *certify = app.add_subcommand("certify", "Build and verify a certificate for r_n");
  add_n(certify, true);
  add_case(certify);
  certify->add_option("--strategy", cfg.strategy, "inductive or solver");
  certify->add_option("--s-max", cfg.s_max, "Largest dilation the solver may use");
  add_io(certify, "json");

  auto *verify_cmd = app.add_subcommand("verify", "Check a certificate JSON file (stdin if omitted)");
  verify_cmd->add_option("certificate", cfg.in_path, "Certificate JSON path or -");
  add_io(verify_cmd, "text");

  auto *moments = app.add_subcommand("moments", "Moment table for d_k and r_n");
  add_n(moments, true);
  add_case(moments);
  add_io(moments, "text");

  auto *demo = app.add_subcommand("demo", "Difference-quotient tables on a test function");
  add_n(demo, true);
  add_case(demo);
  demo->add_option("--fn", cfg.fn, "poly:a0,a1,... | exp | sin | abs_pow:alpha | osc:m,p")->required();
  demo->add_option("--c", cfg.c, "Center point (exact decimal or p/q)");
  demo->add_option("--h0", cfg.h0, "Largest step");
  demo->add_option("--ratio", cfg.ratio, "Step ratio in (0,1)");
  demo->add_option("--steps", cfg.steps, "Number of rows");
  add_io(demo, "text");

  auto *render = app.add_subcommand("render", "Render r_n and R_n, or a certificate's identity");
  add_n(render, false);
  render->add_option("certificate", cfg.in_path, "Certificate JSON path or - (used when --n is absent)");
  add_io(render, "text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App *chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (cfg.format.empty())
    cfg.format = cfg.subcommand == "certify" ? "json" : "text";

  try {
    if (cfg.subcommand == "certify")
      return run_certify(cfg, out, err);
    if (cfg.subcommand == "verify")
      return run_verify(cfg, in, out, err);
    if (cfg.subcommand == "moments")
      return run_moments(cfg, out);
    if (cfg.subcommand == "demo")
      return run_demo(cfg, out, err);
    return run_render(cfg, in, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace ggr::cli
