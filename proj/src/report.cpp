#include "modeq/report.hpp"

#include <cstdio>

namespace modeq::report {

namespace {

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", v);
  return buf;
}

}  // namespace

std::string format_residual(const ArbReal& r, bool full) {
  if (full) return r.to_scientific(r.precision().decimal_digits());
  return r.to_scientific(6);
}

nlohmann::ordered_json to_json(const IdentityReport& r, bool full) {
  nlohmann::ordered_json j;
  j["id"] = std::string(tag(r.id));
  j["q"] = r.q.to_string();
  if (r.residual) j["residual"] = format_residual(*r.residual, full);
  else j["residual"] = nullptr;
  j["tolerance"] = r.tolerance.to_scientific(1);
  j["passed"] = r.passed;
  j["precision_bits"] = r.precision_bits;
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<IdentityReport>& reports, bool full) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, full));
  return arr;
}

nlohmann::ordered_json to_json(const symbolic::Certificate& c) {
  nlohmann::ordered_json j;
  j["step"] = c.step;
  j["status"] = c.passed() ? "exact_zero" : (c.exact_zero ? "numeric_check_failed" : "nonzero_remainder");
  j["elapsed_ms"] = c.elapsed_ms;
  if (!c.exact_zero) j["remainder"] = c.remainder;
  j["notes"] = c.notes;
  return j;
}

std::string to_text(const IdentityReport& r, bool full) {
  std::string line = std::string(tag(r.id)) + "  q=" + r.q.to_string() + "  residual=";
  line += r.residual ? format_residual(*r.residual, full) : "n/a";
  line += r.passed ? "  PASS" : "  FAIL";
  if (!r.error.empty()) line += "  (" + r.error + ")";
  return line;
}

std::string to_text(const symbolic::Certificate& c) {
  if (c.passed()) return c.step + ": EXACT ZERO (" + ms(c.elapsed_ms) + ")";
  std::string line = c.step + ": FAILED (" + ms(c.elapsed_ms) + ")";
  if (!c.exact_zero) line += "\n  remainder: " + c.remainder;
  for (const auto& n : c.notes) {
    if (n.ends_with("FAILED")) line += "\n  " + n;
  }
  return line;
}

}  // namespace modeq::report
