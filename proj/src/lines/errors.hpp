#pragma once

#include <stdexcept>
#include <string>

namespace lines {

// Error taxonomy mapped onto CLI exit codes:
//   precondition violations -> 2, singular surface -> 3,
//   exhausted budgets -> 4, internal consistency traps -> 5.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncidenceError : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct ChartError : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct PrimeRejectionError : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct SingularSurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenericityError : BudgetError {
  using BudgetError::BudgetError;
};
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const PreconditionError*>(&e)) return 2;
  if (dynamic_cast<const SingularSurfaceError*>(&e)) return 3;
  if (dynamic_cast<const BudgetError*>(&e)) return 4;
  if (dynamic_cast<const InternalCheckError*>(&e)) return 5;
  return 1;
}

}  // namespace lines
