#pragma once

#include <stdexcept>
#include <string>

namespace ralloc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Which validity condition an instance failed.
enum class AssumptionClause {
  shape_mismatch,                   // inconsistent vector shapes or non-positive sizes
  total_budget_not_binding,         // sum(b) <= B
  individual_budget_exceeds_total,  // B < b_i for some player
  value_out_of_range,               // a cost value outside [0, M]
  row_not_monotone,                 // a cost row increases somewhere
  row_not_convex,                   // a convex-flagged row fails the difference test
};

const char* to_string(AssumptionClause clause);

/// Instance validation failure; carries the violated clause.
class AssumptionViolation : public Error {
public:
  AssumptionViolation(AssumptionClause clause, const std::string& detail);
  AssumptionClause clause() const { return clause_; }

private:
  AssumptionClause clause_;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// A value was requested at a point that has not been evaluated (or cannot exist).
class MissingValue : public Error {
public:
  using Error::Error;
};

/// Convexity-based bounds requested for an instance not flagged convex.
class NotConvexFlagged : public Error {
public:
  using Error::Error;
};

/// Enumeration would exceed the configured lattice-size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A point-selection rule was invoked with no unevaluated points left.
class AllEvaluated : public Error {
public:
  using Error::Error;
};

/// Invalid generator specification.
class SpecInvalid : public Error {
public:
  using Error::Error;
};

/// Malformed input file or JSON document.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace ralloc
