#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "obk/solver.hpp"

namespace obk {

inline constexpr int kCertificateVersion = 1;

/// JSON text, one factor per line. Stable: equal certificates give equal
/// bytes, and parse followed by serialize reproduces the input.
std::string serialize_certificate(const Certificate& cert);

/// Throws FormatError on malformed JSON or a schema violation. The factors
/// are read as raw vertex lists; whether they form a factorization is left
/// to verify_certificate.
Certificate parse_certificate(std::string_view text, const std::string& source = "<input>");

/// Graphviz digraph of one factor, or of all factors coloured by index.
/// Throws InvalidArgument for an out-of-range index.
std::string to_dot(const Certificate& cert, std::optional<int> factor = std::nullopt);

}  // namespace obk
