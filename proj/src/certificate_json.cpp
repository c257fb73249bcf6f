#include "ggr/certificate_json.hpp"

#include <algorithm>
#include <tuple>

namespace ggr {

using nlohmann::ordered_json;

ordered_json to_json(const Certificate &cert) {
  std::vector<CertTerm> terms = cert.terms;
  std::sort(terms.begin(), terms.end(),
            [](const CertTerm &a, const CertTerm &b) { return std::tie(a.s, a.k) < std::tie(b.s, b.k); });

  ordered_json doc;
  doc["n"] = cert.n;
  doc["case"] = std::string(to_string(cert.case_tag));
  ordered_json arr = ordered_json::array();
  for (const auto &t : terms) {
    ordered_json term;
    term["k"] = t.k;
    term["s"] = t.s;
    term["coeff"] = t.coeff.to_string();
    arr.push_back(std::move(term));
  }
  doc["terms"] = std::move(arr);
  doc["generator_convention"] = std::string(kGeneratorConvention);
  doc["target"] = std::string(kTarget);
  return doc;
}

std::string dump_certificate(const Certificate &cert) { return to_json(cert).dump(2) + "\n"; }

namespace {

const ordered_json &require(const ordered_json &obj, const std::string &key, const std::string &path) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw CertificateFormatError(path + key, "missing field '" + path + key + "'");
  return *it;
}

std::int64_t require_int(const ordered_json &obj, const std::string &key, const std::string &path) {
  const ordered_json &v = require(obj, key, path);
  if (!v.is_number_integer())
    throw CertificateFormatError(path + key, "field '" + path + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string require_string(const ordered_json &obj, const std::string &key, const std::string &path) {
  const ordered_json &v = require(obj, key, path);
  if (!v.is_string())
    throw CertificateFormatError(path + key, "field '" + path + key + "' must be a string");
  return v.get<std::string>();
}

} // namespace

Certificate certificate_from_json(const ordered_json &doc) {
  if (!doc.is_object())
    throw CertificateFormatError("", "certificate must be a JSON object");

  Certificate cert;
  cert.n = require_int(doc, "n", "");
  try {
    cert.case_tag = parse_case(require_string(doc, "case", ""));
  } catch (const std::invalid_argument &e) {
    throw CertificateFormatError("case", std::string("field 'case': ") + e.what());
  }
  if (require_string(doc, "generator_convention", "") != kGeneratorConvention)
    throw CertificateFormatError("generator_convention", "field 'generator_convention' must be \"" +
                                                             std::string(kGeneratorConvention) + "\"");
  if (require_string(doc, "target", "") != kTarget)
    throw CertificateFormatError("target", "field 'target' must be \"" + std::string(kTarget) + "\"");

  const ordered_json &terms = require(doc, "terms", "");
  if (!terms.is_array())
    throw CertificateFormatError("terms", "field 'terms' must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string path = "terms[" + std::to_string(i) + "].";
    const ordered_json &t = terms[i];
    if (!t.is_object())
      throw CertificateFormatError("terms[" + std::to_string(i) + "]", "each term must be an object");
    CertTerm term{require_int(t, "k", path), require_int(t, "s", path), Rational(0)};
    std::string coeff = require_string(t, "coeff", path);
    if (coeff.find_first_of(".eE+") != std::string::npos)
      throw CertificateFormatError(path + "coeff", "field '" + path + "coeff' must be a fraction \"p\" or \"p/q\"");
    try {
      term.coeff = Rational::parse(coeff);
    } catch (const std::invalid_argument &e) {
      throw CertificateFormatError(path + "coeff", "field '" + path + "coeff': " + e.what());
    }
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

Certificate parse_certificate(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw CertificateFormatError("", std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

} // namespace ggr
