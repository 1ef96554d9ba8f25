#pragma once

// Serialized decomposition certificates. JSON is the canonical format; text
// and DOT are views derived from it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamdec/verify.hpp"

namespace hamdec {

inline constexpr const char* kToolVersion = "0.1.0";

class CertificateError : public std::runtime_error {
 public:
  explicit CertificateError(const std::string& message) : std::runtime_error(message) {}
};

struct CertificateMeta {
  std::string version;
  std::vector<std::string> cycle_routes;
  std::string matching_route;

  friend bool operator==(const CertificateMeta&, const CertificateMeta&) = default;
};

struct Certificate {
  int n = 0;
  std::vector<std::string> connection_set;
  std::vector<std::vector<std::string>> cycles;
  std::optional<std::vector<std::array<std::string, 2>>> matching;
  CertificateMeta meta;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate make_certificate(const ConnectionSet& s, const Decomposition& d);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

std::string certificate_to_text(const Certificate& c);
std::string certificate_to_dot(const Certificate& c);

// Rebuilds the graph and the claimed decomposition for verification. Throws
// CertificateError on tokens or structure that cannot be interpreted at all.
struct Instantiated {
  CayleyGraph graph;
  Decomposition decomposition;
};
Instantiated instantiate_certificate(const Certificate& c);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace hamdec
