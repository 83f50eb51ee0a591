#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egfasym {

enum class ErrorKind {
  // params
  NonPositiveM,
  OrderViolation,
  ZeroR,
  InvalidNumber,
  // series
  CapacityExceeded,
  // numerics
  NegativeArgument,
  // saddle
  DerivativeVanishes,
  NoConvergence,
  // asymptotics
  NegativeVariance,
  FullFormulaRequired,
  // richardson
  OrderTooLarge,
  // oeis
  MalformedLine,
  NonContiguousIndex,
  Empty,
  NetworkError,
  ParseError,
  InvalidAnum,
  NotExactMode,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind next to the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace egfasym
