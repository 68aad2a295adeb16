#pragma once

#include <stdexcept>
#include <string>

namespace pstop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PSTOP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

PSTOP_DEFINE_ERROR(CenteringViolation)
PSTOP_DEFINE_ERROR(UnknownPoint)
PSTOP_DEFINE_ERROR(UnknownFilter)
PSTOP_DEFINE_ERROR(MalformedEdge)
PSTOP_DEFINE_ERROR(EmptyHyperedge)
PSTOP_DEFINE_ERROR(AsymmetricMatrix)
PSTOP_DEFINE_ERROR(NegativeDistance)
PSTOP_DEFINE_ERROR(NotATopology)
PSTOP_DEFINE_ERROR(KindMismatch)
PSTOP_DEFINE_ERROR(NotAPartition)
PSTOP_DEFINE_ERROR(ExponentialTooLarge)
PSTOP_DEFINE_ERROR(NotContinuous)
PSTOP_DEFINE_ERROR(DomainMismatch)
PSTOP_DEFINE_ERROR(EndMismatch)
PSTOP_DEFINE_ERROR(NotEmbedding)
PSTOP_DEFINE_ERROR(SearchSpaceTooLarge)
PSTOP_DEFINE_ERROR(IncompatibleData)
PSTOP_DEFINE_ERROR(NotALoop)
PSTOP_DEFINE_ERROR(BudgetExhausted)
PSTOP_DEFINE_ERROR(NotACoveringSystem)
PSTOP_DEFINE_ERROR(NotContinuousAttachment)

#undef PSTOP_DEFINE_ERROR

/// Parse failure in one of the interchange formats, with a location.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& what)
      : Error("ParseError at " + location + ": " + what), location_(location) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace pstop
