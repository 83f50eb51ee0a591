#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egfasym/asymptotics.hpp"
#include "egfasym/numerics.hpp"
#include "egfasym/real.hpp"
#include "egfasym/series.hpp"

namespace egfasym {

/// a(n) / estimate(n) for n = 1..L.
struct RatioSeries {
  std::string label;
  Formula formula = Formula::Full;
  std::vector<Real> ratios;  // ratios[n - 1]
  PrecisionContext ctx;

  std::size_t length() const { return ratios.size(); }
  const Real& at(std::size_t n) const { return ratios.at(n - 1); }
};

/// a(n) e^{m+r+s} / estimate(n) for a single n >= 1.
Real ratio_at(const CoeffTable& coeffs, std::size_t n, Formula formula, const PrecisionContext& ctx);

/// Uses every coefficient a(1..size-1); the prefactor e^{m+r+s} is applied
/// before dividing. `jobs` worker threads split the n range.
RatioSeries ratio_series(const CoeffTable& coeffs, Formula formula, const PrecisionContext& ctx,
                         std::string label = {}, unsigned jobs = 1);

/// (-1)^{m+j} j^{m-1} / ((j-1)! (m-j)!) for j = 1..m, exactly.
std::vector<mpq_class> richardson_weights(unsigned order);

/// sum_j w_j f(j floor(L/m)) with f given as f[0] = f(1) .. f[L-1] = f(L).
/// Accumulates at max(ctx.digits(), 2 order) digits.
Real richardson_extrapolate(std::span<const Real> f, unsigned order, const PrecisionContext& ctx);
/// Same scheme in exact rational arithmetic.
mpq_class richardson_extrapolate(std::span<const mpq_class> f, unsigned order);

struct ExtrapolationReport {
  std::vector<unsigned> orders;
  std::vector<Real> extrapolants;
  Real target;
  PrecisionContext ctx;
};

ExtrapolationReport extrapolation_table(std::span<const Real> f, std::span<const unsigned> orders,
                                        const PrecisionContext& ctx);

/// "order extrapolant" rows at ctx.digits() significant digits.
void write_report(std::ostream& out, const ExtrapolationReport& report);

/// "lo:hi:step" or "a,b,c".
std::vector<unsigned> parse_orders(std::string_view text);

}  // namespace egfasym
