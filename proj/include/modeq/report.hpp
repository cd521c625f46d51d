#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modeq/identities.hpp"
#include "modeq/symbolic/proofs.hpp"

namespace modeq::report {

/// Residual as a 6-significant-digit scientific string, or the full value.
std::string format_residual(const ArbReal& r, bool full = false);

nlohmann::ordered_json to_json(const IdentityReport& r, bool full = false);
nlohmann::ordered_json to_json(const std::vector<IdentityReport>& reports, bool full = false);
nlohmann::ordered_json to_json(const symbolic::Certificate& c);

/// One line: tag, q, residual, PASS/FAIL.
std::string to_text(const IdentityReport& r, bool full = false);
/// "step: EXACT ZERO (…ms)" or the rendered remainder.
std::string to_text(const symbolic::Certificate& c);

}  // namespace modeq::report
