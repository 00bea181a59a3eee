#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dgh {

using Scalar = mpq_class;

// Every failure carries a kind so the CLI can map it to an exit code.
enum class ErrorKind {
  InvalidParam,
  RingMismatch,
  LabelMismatch,
  VariantMismatch,
  IndexOutOfRange,
  InvalidBasisKey,
  DegreeBoundExceeded,
  SingularTable,
  NotInvertible,
  NotStabilized,
  FiltrationLeak,
  DivisionByZero,
  InternalError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

// Accepts "n", "-n", "p/q". Result is canonicalized.
Scalar parse_scalar(std::string_view text);
std::vector<Scalar> parse_scalar_list(std::string_view text);
std::string to_string(const Scalar& x);

Scalar divide(const Scalar& a, const Scalar& b);
Scalar power(const Scalar& x, long e);

}  // namespace dgh
