#pragma once

#include <stdexcept>

namespace outerstring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OUTERSTRING_ERROR(Name)   \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

OUTERSTRING_ERROR(DegenerateContact);
OUTERSTRING_ERROR(DegenerateInput);
OUTERSTRING_ERROR(EpsilonTooLarge);
OUTERSTRING_ERROR(SizeLimitExceeded);
OUTERSTRING_ERROR(WidthLimitExceeded);
OUTERSTRING_ERROR(ParseError);
OUTERSTRING_ERROR(NotAModel);
OUTERSTRING_ERROR(DisconnectedPair);
OUTERSTRING_ERROR(TraversalStuck);
OUTERSTRING_ERROR(PreconditionViolated);

#undef OUTERSTRING_ERROR

}  // namespace outerstring
