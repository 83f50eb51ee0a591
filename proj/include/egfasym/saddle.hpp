#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "egfasym/numerics.hpp"
#include "egfasym/params.hpp"
#include "egfasym/real.hpp"

namespace egfasym {

enum class SaddleMethod { MainTerm, NewtonOnce, NewtonConverged };

std::string_view to_string(SaddleMethod method);

struct SaddlePoint {
  Real n;
  Real z0;        // W(n/m)/b
  Real z;         // refined root
  Real residual;  // f(z)
  SaddleMethod method;
  int iterations = 0;
};

/// f(z) = (b m e^{bz} + d r e^{dz}) z - n, i.e. a(z) - n.
Real saddle_residual(const EgfParams& params, const Real& n, const Real& z);
/// f'(z) = b m e^{bz}(1 + bz) + d r e^{dz}(1 + dz).
Real saddle_derivative(const EgfParams& params, const Real& z);
/// Hayman a(z) = z G'(z) / G(z).
Real hayman_a(const EgfParams& params, const Real& z);
/// Hayman b(z) = z a'(z).
Real hayman_b(const EgfParams& params, const Real& z);

Real saddle_main_term(const EgfParams& params, const Real& n, const PrecisionContext& ctx);
Real saddle_main_term(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx);

/// One Newton step on f from z_in.
Real saddle_newton_refine(const EgfParams& params, const Real& n, const Real& z_in,
                          const PrecisionContext& ctx);
Real saddle_newton_refine(const EgfParams& params, std::uint64_t n, const Real& z_in,
                          const PrecisionContext& ctx);

/// The displayed closed form of one Newton step from the main term, with
/// e^W eliminated via e^{W(x)} = x / W(x).
Real saddle_closed_form(const EgfParams& params, const Real& n, const PrecisionContext& ctx);
Real saddle_closed_form(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx);

/// Newton from the main term until |f(z)| <= tol * n. Default tol is
/// 10^{-(digits/2)}. Steps leaving (0, inf) are bisected back toward z0.
SaddlePoint saddle_solve(const EgfParams& params, const Real& n, const PrecisionContext& ctx,
                         std::optional<Real> tol = std::nullopt, int max_iter = 50);
SaddlePoint saddle_solve(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx,
                         std::optional<Real> tol = std::nullopt, int max_iter = 50);

}  // namespace egfasym
