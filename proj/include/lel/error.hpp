#pragma once

#include <exception>
#include <string>
#include <utility>

#include <json.hpp>

namespace lel {

using Json = nlohmann::ordered_json;

// Machine-readable failure categories. Anything that is a *mathematical*
// verdict (an audit finding a law violation) is reported, not thrown; these
// codes cover contract violations: unparsable input, unmet preconditions,
// exhausted budgets, and internal cross-checks.
enum class Errc {
  ParseError,
  UsageError,
  NotAPartialOrder,
  AmbiguousOrthosupplement,
  NotBelow,
  NotALattice,
  NotALEA,
  NotSharp,
  NotWeakLEAContext,
  CwViolation,
  UnboundAtom,
  MissingMetavariable,
  UnknownRule,
  PremiseNotFound,
  ConclusionMismatch,
  BudgetExceeded,
  InternalInconsistency,
};

const char* errc_name(Errc c);

class Error : public std::exception {
 public:
  Error(Errc code, std::string message, Json detail = Json())
      : code_(code), message_(std::move(message)), detail_(std::move(detail)) {
    what_ = std::string(errc_name(code_)) + ": " + message_;
  }

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }
  const Json& detail() const { return detail_; }
  const char* what() const noexcept override { return what_.c_str(); }

  Json to_json() const {
    Json j;
    j["error"] = errc_name(code_);
    j["message"] = message_;
    if (!detail_.is_null()) j["detail"] = detail_;
    return j;
  }

 private:
  Errc code_;
  std::string message_;
  Json detail_;
  std::string what_;
};

}  // namespace lel
