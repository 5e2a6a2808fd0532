#pragma once

// Deterministic report documents: sorted keys, graded-lex term order, exact
// rationals as strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "copoisson/checks.hpp"

namespace copoisson {

inline constexpr const char* kToolName = "copoisson";
inline constexpr const char* kToolVersion = "0.1.0";

/// "fnv1a64:<16 hex digits>" over the raw bytes.
std::string input_digest(std::string_view bytes);

nlohmann::json report_to_json(const CheckReport& r);
/// "[PASS] name (degree N)" followed by indented witnesses.
std::string report_to_text(const CheckReport& r);

/// Envelope shared by every command.
nlohmann::json document_header(const std::string& command);

}  // namespace copoisson
