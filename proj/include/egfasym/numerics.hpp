#pragma once

#include <cstdint>

#include "egfasym/real.hpp"

namespace egfasym {

/// Decimal precision policy threaded explicitly through every float
/// computation. Work happens at digits + guard; `digits` is what gets
/// reported.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits = 64, int guard = 10);

  int digits() const { return digits_; }
  int guard() const { return guard_; }
  Bits working_bits() const { return bits_for_digits(digits_ + guard_); }
  Bits output_bits() const { return bits_for_digits(digits_); }
  /// 10^{-(digits+guard)} at working precision.
  Real working_epsilon() const;
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

/// Principal branch W0 on [0, inf): the w >= 0 with w e^w = x.
/// Halley iteration from ln x - ln ln x (x >= e) or x (x < e).
Real lambert_w0(const Real& x, const PrecisionContext& ctx);

/// n^n e^{-n} sqrt(2 pi n).
Real stirling_factorial(std::uint64_t n, const PrecisionContext& ctx);
/// ln of stirling_factorial(n), without forming the huge power.
Real log_stirling_factorial(std::uint64_t n, const PrecisionContext& ctx);

/// ln(n!), from the exact integer up to kExactLogFactorialLimit and from
/// the Stirling series beyond.
Real log_factorial(std::uint64_t n, const PrecisionContext& ctx);
/// ln(n!) from the asymptotic Stirling series alone (n >= 1).
Real log_factorial_series(std::uint64_t n, const PrecisionContext& ctx);

inline constexpr std::uint64_t kExactLogFactorialLimit = 10000;

}  // namespace egfasym
