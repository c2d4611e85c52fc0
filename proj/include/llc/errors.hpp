#pragma once

#include <stdexcept>
#include <string>

namespace llc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define LLC_ERROR_TYPE(Name)                                      \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

LLC_ERROR_TYPE(MixedScale)
LLC_ERROR_TYPE(PrecisionExhausted)
LLC_ERROR_TYPE(ZeroInput)
LLC_ERROR_TYPE(InternalMismatch)
LLC_ERROR_TYPE(DegenerateForm)
LLC_ERROR_TYPE(NoSolution)
LLC_ERROR_TYPE(AmbiguousBeyondPrecision)
LLC_ERROR_TYPE(UnresolvableClass)
LLC_ERROR_TYPE(NotPositiveDepth)
LLC_ERROR_TYPE(OutOfRange)
LLC_ERROR_TYPE(NotElliptic)
LLC_ERROR_TYPE(NotRegular)
LLC_ERROR_TYPE(WrongRange)
LLC_ERROR_TYPE(NotGenuine)
LLC_ERROR_TYPE(ConfigError)

#undef LLC_ERROR_TYPE

}  // namespace llc
