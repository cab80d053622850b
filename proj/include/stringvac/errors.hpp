#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace stringvac {

/// Root of every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short stable tag used in machine-readable reports.
  [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

#define STRINGVAC_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                                 \
   public:                                                                   \
    using Base::Base;                                                        \
    [[nodiscard]] const char* kind() const noexcept override { return #Name; } \
  };

// Argument outside the region where the quantity is defined.
STRINGVAC_DEFINE_ERROR(DomainError, Error)
// Argument sits on (or within 1e-12 of) a gamma-function pole.
STRINGVAC_DEFINE_ERROR(PoleError, DomainError)
// |m| > l in a mode index.
STRINGVAC_DEFINE_ERROR(IndexError, DomainError)
// Two points closer than the separation guard, or a null-separated image.
STRINGVAC_DEFINE_ERROR(CoincidenceError, DomainError)
// Unscaled evaluation would overflow a double.
STRINGVAC_DEFINE_ERROR(OverflowError, Error)

// Series, sums and integrals that could not certify the requested tolerance.
STRINGVAC_DEFINE_ERROR(ConvergenceError, Error)
STRINGVAC_DEFINE_ERROR(SlowConvergence, ConvergenceError)
STRINGVAC_DEFINE_ERROR(QuadratureError, ConvergenceError)
STRINGVAC_DEFINE_ERROR(ExtrapolationError, ConvergenceError)
STRINGVAC_DEFINE_ERROR(StiffnessError, ConvergenceError)
STRINGVAC_DEFINE_ERROR(SeriesRadiusError, ConvergenceError)

#undef STRINGVAC_DEFINE_ERROR

/// "%.6g" rendering of a number for error messages.
inline std::string to_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace stringvac
