#ifndef HESSCOH_RATIONAL_HPP
#define HESSCOH_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hesscoh {

// Exact arithmetic everywhere: arbitrary-precision integers for counting
// polynomials, rationals for all linear algebra. No floating point.
using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
  NotMonotone,
  BelowDiagonal,
  OutOfRange,
  SizeTooSmall,
  AlreadyConnected,
  Disconnected,
  BadParameters,
  TooLarge,
  ReportedFailure,
  ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::BelowDiagonal: return "BelowDiagonal";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::AlreadyConnected: return "AlreadyConnected";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ReportedFailure: return "ReportedFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hesscoh

#endif
