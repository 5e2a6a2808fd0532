#include "copoisson/report.hpp"

#include <cstdint>
#include <cstdio>

namespace copoisson {

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"input", w.input}, {"residual", w.residual}});
  return {{"name", r.check_name},
          {"verdict", to_string(r.verdict)},
          {"degree_checked", r.degree_checked},
          {"violation_count", r.violation_count},
          {"witnesses", witnesses},
          {"note", r.note}};
}

std::string report_to_text(const CheckReport& r) {
  std::string tag = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "N/A";
  std::string s = "[" + tag + "] " + r.check_name + " (degree " + std::to_string(r.degree_checked) + ")";
  if (r.violation_count) s += ": " + std::to_string(r.violation_count) + " violation(s)";
  if (!r.note.empty()) s += " -- " + r.note;
  s += "\n";
  for (const auto& w : r.witnesses) s += "    " + w.input + ": " + w.residual + "\n";
  if (r.witnesses.size() < r.violation_count) {
    s += "    ... " + std::to_string(r.violation_count - r.witnesses.size()) + " more\n";
  }
  return s;
}

nlohmann::json document_header(const std::string& command) {
  return {{"tool_version", std::string(kToolName) + " " + kToolVersion}, {"command", command}};
}

}  // namespace copoisson
