#pragma once

#include <stdexcept>
#include <string>

namespace jackpos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JACKPOS_ERROR(Name)                         \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

JACKPOS_ERROR(NonPolynomialAlpha);
JACKPOS_ERROR(TooManyBlocks);
JACKPOS_ERROR(SizeMismatch);
JACKPOS_ERROR(GroundSetMismatch);
JACKPOS_ERROR(LimitExceeded);
JACKPOS_ERROR(NotContained);
JACKPOS_ERROR(PoleEncountered);
JACKPOS_ERROR(SingularSystem);
JACKPOS_ERROR(DegreeGuardFailed);
JACKPOS_ERROR(DenominatorNotCleared);
JACKPOS_ERROR(InvalidArgument);

#undef JACKPOS_ERROR

}  // namespace jackpos
