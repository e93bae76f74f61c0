#pragma once

#include <stdexcept>
#include <string>

namespace seqproof {

// Base of every failure raised by the library. Precondition violations that
// have no dedicated kind use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SEQPROOF_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

SEQPROOF_DEFINE_ERROR(PrecisionExhausted);
SEQPROOF_DEFINE_ERROR(ResourceCap);
SEQPROOF_DEFINE_ERROR(NegativeRadicand);
SEQPROOF_DEFINE_ERROR(NonIntegralCoefficient);
SEQPROOF_DEFINE_ERROR(ZeroConstantDenominator);
SEQPROOF_DEFINE_ERROR(NonIntegralResult);
SEQPROOF_DEFINE_ERROR(NotDivisibleBy3);
SEQPROOF_DEFINE_ERROR(BracketViolation);
SEQPROOF_DEFINE_ERROR(KOutOfRange);
SEQPROOF_DEFINE_ERROR(NetworkUnavailable);
SEQPROOF_DEFINE_ERROR(MalformedBFile);
SEQPROOF_DEFINE_ERROR(UnknownFamily);
SEQPROOF_DEFINE_ERROR(InvalidParams);

#undef SEQPROOF_DEFINE_ERROR

}  // namespace seqproof
