#pragma once

#include <stdexcept>
#include <string>

namespace joints {

// Every failure raised by the library derives from Error so callers can catch
// one type at the boundary (the CLI maps it to an exit code).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JOINTS_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  }

JOINTS_DEFINE_ERROR(InvalidArgument);
JOINTS_DEFINE_ERROR(ZeroDirection);
JOINTS_DEFINE_ERROR(GenericityExhausted);
JOINTS_DEFINE_ERROR(ResourceLimit);
JOINTS_DEFINE_ERROR(EmptyConfig);
JOINTS_DEFINE_ERROR(HypothesisViolated);
JOINTS_DEFINE_ERROR(UnsupportedRepresentation);
JOINTS_DEFINE_ERROR(DegreeZero);
JOINTS_DEFINE_ERROR(TooManySets);
JOINTS_DEFINE_ERROR(BudgetTooSmall);
JOINTS_DEFINE_ERROR(LineInZeroSet);
JOINTS_DEFINE_ERROR(VanishingDerivative);
JOINTS_DEFINE_ERROR(DegenerateElimination);
JOINTS_DEFINE_ERROR(ParameterOutOfRange);
JOINTS_DEFINE_ERROR(ParseError);

#undef JOINTS_DEFINE_ERROR

}  // namespace joints
