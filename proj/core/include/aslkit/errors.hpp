#pragma once

#include <stdexcept>
#include <string>

namespace aslkit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ASLKIT_DECLARE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

ASLKIT_DECLARE_ERROR(CycleDetected);
ASLKIT_DECLARE_ERROR(DuplicateLabel);
ASLKIT_DECLARE_ERROR(UnknownLabel);
ASLKIT_DECLARE_ERROR(CapacityExceeded);
ASLKIT_DECLARE_ERROR(NotAntichain);
ASLKIT_DECLARE_ERROR(NotAnIdeal);
ASLKIT_DECLARE_ERROR(DimensionMismatch);
ASLKIT_DECLARE_ERROR(NonTermination);
ASLKIT_DECLARE_ERROR(MissingRelation);
ASLKIT_DECLARE_ERROR(BudgetExceeded);
ASLKIT_DECLARE_ERROR(PreconditionViolated);
ASLKIT_DECLARE_ERROR(ParseError);

#undef ASLKIT_DECLARE_ERROR

}  // namespace aslkit
