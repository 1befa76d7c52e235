// Error hierarchy shared by all modules.
//
// The distinction matters for callers:
//   InvalidInput          — the caller handed us garbage (bad file, non-planar
//                           input, forest references unknown vertices, ...).
//   StructureViolation    — input was well-formed but the reduction engine ran
//                           off the end of its rule table: the graph does not
//                           have the structure the engine is entitled to
//                           assume. Carries accumulated diagnostics.
//   InternalInconsistency — a state the engine proves impossible was observed;
//                           indicates a bug in this code (or a violated
//                           precondition that validation should have caught).
//   LiftFailed            — a forest produced by a lift stage failed validation
//                           in its context graph. Always a bug; never ignored.
//   AccountingMismatch    — a reduction step's declared accounting tuple failed
//                           the runtime bound checks against measured deltas.
//   BudgetExceeded        — the exact oracle hit its node budget.
//   ArithmeticOverflow    — exact rational arithmetic left the int64 range.
#pragma once

#include <stdexcept>
#include <string>

namespace inforest {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("invalid input: " + msg) {}
};

struct StructureViolation : Error {
  explicit StructureViolation(const std::string& msg)
      : Error("structure violation: " + msg) {}
};

struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg)
      : Error("internal inconsistency: " + msg) {}
};

struct LiftFailed : Error {
  explicit LiftFailed(const std::string& msg) : Error("lift failed: " + msg) {}
};

struct AccountingMismatch : Error {
  explicit AccountingMismatch(const std::string& msg)
      : Error("accounting mismatch: " + msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg)
      : Error("budget exceeded: " + msg) {}
};

struct ArithmeticOverflow : Error {
  explicit ArithmeticOverflow(const std::string& msg)
      : Error("arithmetic overflow: " + msg) {}
};

}  // namespace inforest
