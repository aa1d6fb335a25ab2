#pragma once

#include <map>
#include <optional>
#include <string>

#include "orlab/ext_nonneg.hpp"

namespace orlab {

/// Three-state property flag. Several catalog properties are asserted for
/// some functions only; operations that need a flag refuse on `unknown`
/// rather than guessing.
enum class TriState { yes, no, unknown };

enum class Status { verified, violated, report_only, not_applicable };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "unknown";
  }
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::violated: return "violated";
    case Status::report_only: return "report_only";
    default: return "not_applicable";
  }
}

/// One audited inequality: left side against a right-side bound, with
/// slack = bound/lhs and any hypothesis gates that applied.
struct VerificationRecord {
  std::string id;
  std::string module;
  std::string inputs;
  std::optional<double> lambda;
  ExtNonneg lhs;
  ExtNonneg bound;
  double slack = 0.0;
  Status status = Status::report_only;
  std::map<std::string, TriState> hypotheses;
};

/// bound/lhs as a plain double; degenerate cases resolve to the value a
/// limit argument would give (0/0 -> 1, x/0 -> inf).
inline double slack_ratio(const ExtNonneg& lhs, const ExtNonneg& bound) {
  if (lhs.is_infinite() && bound.is_infinite()) return 1.0;
  if (bound.is_infinite()) return std::numeric_limits<double>::infinity();
  if (lhs.is_infinite()) return 0.0;
  if (lhs.value() == 0.0) {
    return bound.value() == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return bound.value() / lhs.value();
}

}  // namespace orlab
