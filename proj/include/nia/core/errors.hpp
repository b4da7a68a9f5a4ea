#pragma once

#include <stdexcept>
#include <string>

namespace nia {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NIA_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

NIA_DEFINE_ERROR(InvalidEncoding);
NIA_DEFINE_ERROR(EncodingMismatch);
NIA_DEFINE_ERROR(InvalidBudget);
NIA_DEFINE_ERROR(InvalidParams);
NIA_DEFINE_ERROR(SchemaError);
NIA_DEFINE_ERROR(IllegalPath);
NIA_DEFINE_ERROR(NotFound);
NIA_DEFINE_ERROR(InvalidDescriptor);
NIA_DEFINE_ERROR(CapacityOverflow);
NIA_DEFINE_ERROR(TooLarge);
NIA_DEFINE_ERROR(InvalidInstance);
NIA_DEFINE_ERROR(InvalidTour);
NIA_DEFINE_ERROR(NonPositiveSeries);
NIA_DEFINE_ERROR(TooShort);
NIA_DEFINE_ERROR(OutOfBounds);
NIA_DEFINE_ERROR(IoError);

#undef NIA_DEFINE_ERROR

/// Raised by the recommender when no rule fires. `nearest()` lists the
/// closest rule ids, best first.
class UnmappedDescriptor : public Error {
 public:
  UnmappedDescriptor(const std::string& what, std::string nearest)
      : Error(what), nearest_(std::move(nearest)) {}
  const std::string& nearest() const noexcept { return nearest_; }

 private:
  std::string nearest_;
};

}  // namespace nia
