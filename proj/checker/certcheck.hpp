// Standalone certificate checker.
//
// Reads the textual certificates produced by the solver and re-verifies every
// claim with plain rational arithmetic. It has its own parsers and does not
// link against the solver library.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace certcheck {

struct Report {
  bool ok = false;
  std::size_t claims = 0;  ///< claim blocks verified
  std::size_t line = 0;    ///< offending line when !ok, 0 if not line-specific
  std::string message;
};

/// instance_text, when given, is the instance the certificate was computed
/// from; pick lines and bcase/pcase claims are then checked against it.
Report check(std::string_view certificate, std::optional<std::string_view> instance_text = std::nullopt);

}  // namespace certcheck
