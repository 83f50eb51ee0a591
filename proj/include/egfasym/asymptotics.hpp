#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "egfasym/numerics.hpp"
#include "egfasym/params.hpp"
#include "egfasym/real.hpp"

namespace egfasym {

enum class Formula {
  Hayman,      // full formula at the converged saddle root
  Full,        // full formula at the closed-form saddle
  Simplified,  // b/d >= 2 shape with the regime constant c
};

enum class FactorialMode { Exact, Stirling };

std::string_view to_string(Formula formula);
/// "full" | "simplified" | "hayman"; throws InvalidArgument otherwise.
Formula parse_formula(std::string_view name);

/// One asymptotic value, carried as its natural log.
struct AsympEstimate {
  std::uint64_t n = 0;
  Formula formula = Formula::Full;
  Real log_value;
  Real z;  // saddle used; W(n/m)/b for Simplified
  PrecisionContext ctx;

  Real log10_value() const;
  /// "<mantissa>e<exponent>" with a ctx.digits()-digit mantissa.
  std::string rendered() const;
};

/// Renders e^{log_value} as "<mantissa>e<exponent>".
std::string render_from_log(const Real& log_value, int digits);

/// G(z) n! / (z^n sqrt(2 pi b(z))) in log space.
AsympEstimate hayman_estimate(const EgfParams& params, std::uint64_t n, const Real& z,
                              const PrecisionContext& ctx, FactorialMode factorial = FactorialMode::Stirling);

/// Full formula at saddle_closed_form(params, n).
AsympEstimate asymp_full(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx);

/// Full formula at the saddle_solve root.
AsympEstimate asymp_hayman(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx,
                           FactorialMode factorial = FactorialMode::Stirling);

/// log c: 0 when b/d > 2, -r^2/(8m) when b/d = 2. FullFormulaRequired below 2.
mpq_class correction_constant(const EgfParams& params);

/// c (bn/W)^n e^{r (n/(mW))^{d/b} + n/W - n + s} / sqrt(W + 1), W = W(n/m).
AsympEstimate asymp_simplified(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx);

AsympEstimate estimate(const EgfParams& params, std::uint64_t n, Formula formula,
                       const PrecisionContext& ctx);

/// Context with enough extra digits that e^{log a(n)} keeps ctx.digits()
/// significant digits; log a(n) grows like n log n.
PrecisionContext log_space_context(const PrecisionContext& ctx, std::uint64_t n);

}  // namespace egfasym
