#ifndef GGR_CERTIFICATE_JSON_HPP
#define GGR_CERTIFICATE_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ggr/certificate.hpp"

namespace ggr {

inline constexpr std::string_view kGeneratorConvention = "t^(-s*k)*(t^s-1)^n";
inline constexpr std::string_view kTarget = "r_n";

/// Malformed certificate document; field() names the offending key.
class CertificateFormatError : public std::runtime_error {
public:
  CertificateFormatError(std::string field, const std::string &what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Keys in the order n, case, terms, generator_convention, target; terms
/// sorted by (s, k); coefficients as lowest-terms "p/q" strings.
nlohmann::ordered_json to_json(const Certificate &cert);

/// Pretty-printed document with a trailing newline.
std::string dump_certificate(const Certificate &cert);

Certificate certificate_from_json(const nlohmann::ordered_json &doc);

/// Parses text; syntax errors are reported as CertificateFormatError too.
Certificate parse_certificate(std::string_view text);

} // namespace ggr

#endif // GGR_CERTIFICATE_JSON_HPP
