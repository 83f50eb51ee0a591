#include "egfasym/asymptotics.hpp"

#include <cmath>

#include "egfasym/error.hpp"
#include "egfasym/saddle.hpp"

namespace egfasym {

std::string_view to_string(Formula formula) {
  switch (formula) {
    case Formula::Hayman: return "hayman";
    case Formula::Full: return "full";
    case Formula::Simplified: return "simplified";
  }
  return "unknown";
}

Formula parse_formula(std::string_view name) {
  if (name == "full") return Formula::Full;
  if (name == "simplified") return Formula::Simplified;
  if (name == "hayman") return Formula::Hayman;
  throw Error(ErrorKind::InvalidArgument, "unknown formula '" + std::string(name) + "'");
}

PrecisionContext log_space_context(const PrecisionContext& ctx, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const int extra = static_cast<int>(std::ceil(std::log10(nd * std::log(nd + 2.0) + 10.0))) + 2;
  return PrecisionContext(ctx.digits() + extra, ctx.guard());
}

std::string render_from_log(const Real& log_value, int digits) {
  const Bits bits = log_value.precision();
  const Real l10 = log_value / ln10(bits);
  Real e = floor(l10);
  Real mant = exp((l10 - e) * ln10(bits));
  // rounding to `digits` may carry the mantissa up to 10
  std::string m = mant.to_string(digits);
  if (m.rfind("10", 0) == 0 && m.find('e') == std::string::npos) {
    e = e + 1L;
    m = (mant / 10L).to_string(digits);
  }
  if (m.find('.') == std::string::npos && digits > 1) m += ".";
  mpz_class ez;
  mpfr_get_z(ez.get_mpz_t(), e.get(), MPFR_RNDN);
  return m + "e" + ez.get_str();
}

Real AsympEstimate::log10_value() const { return log_value / ln10(log_value.precision()); }

std::string AsympEstimate::rendered() const { return render_from_log(log_value, ctx.digits()); }

namespace {

Real from_u64(std::uint64_t n, Bits bits) { return Real(mpz_class(std::to_string(n)), bits); }

void require_n(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "asymptotic estimates need n >= 1");
}

// b m e^{bz}(bz+1) + d r e^{dz}(dz+1), the quantity under the square root.
Real variance_core(const EgfParams& p, const Real& z) {
  const Real v = saddle_derivative(p, z);
  if (v.sign() <= 0) {
    throw Error(ErrorKind::NegativeVariance, "b(z) <= 0 at z=" + z.to_string(20));
  }
  return v;
}

}  // namespace

AsympEstimate hayman_estimate(const EgfParams& params, std::uint64_t n, const Real& z_in,
                              const PrecisionContext& ctx, FactorialMode factorial) {
  require_n(n);
  if (z_in.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "hayman_estimate needs z > 0");
  const PrecisionContext wide = log_space_context(ctx, n);
  const Bits bits = wide.working_bits();
  const Real z = z_in.with_precision(bits);
  const Real bz = z * variance_core(params, z);
  const Real lng = exp(z * params.b()) * params.m() + exp(z * params.d()) * params.r() + params.s();
  const Real lnfact =
      factorial == FactorialMode::Exact ? log_factorial(n, wide) : log_stirling_factorial(n, wide);
  const Real value = lng - from_u64(n, bits) * log(z) - log(2L * pi(bits) * bz) / 2L + lnfact.with_precision(bits);
  return {n, Formula::Hayman, value, z, ctx};
}

namespace {

AsympEstimate full_formula_at(const EgfParams& params, std::uint64_t n, const Real& z_in,
                              const PrecisionContext& wide, const PrecisionContext& ctx, Formula label) {
  const Bits bits = wide.working_bits();
  const Real z = z_in.with_precision(bits);
  const Real nr = from_u64(n, bits);
  const Real core = variance_core(params, z);
  // (n + 1/2)(ln n - ln z) + m e^{bz} + r e^{dz} - n + s - ln(core)/2
  const Real value = (nr + mpq_class(1, 2)) * (log(nr) - log(z)) + exp(z * params.b()) * params.m() +
                     exp(z * params.d()) * params.r() - nr + params.s() - log(core) / 2L;
  return {n, label, value, z, ctx};
}

}  // namespace

AsympEstimate asymp_full(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx) {
  require_n(n);
  const PrecisionContext wide = log_space_context(ctx, n);
  return full_formula_at(params, n, saddle_closed_form(params, n, wide), wide, ctx, Formula::Full);
}

AsympEstimate asymp_hayman(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx,
                           FactorialMode factorial) {
  require_n(n);
  const PrecisionContext wide = log_space_context(ctx, n);
  // the log-variance term is first order in the saddle error: solve fully
  const Real tol = pow(Real(10L, wide.working_bits()), mpq_class(-wide.digits() - wide.guard() / 2));
  const SaddlePoint sp = saddle_solve(params, n, wide, tol);
  if (factorial == FactorialMode::Exact) return hayman_estimate(params, n, sp.z, ctx, factorial);
  return full_formula_at(params, n, sp.z, wide, ctx, Formula::Hayman);
}

mpq_class correction_constant(const EgfParams& params) {
  switch (classify_regime(params)) {
    case Regime::Super: return mpq_class(0);
    case Regime::Boundary: return mpq_class(-(params.r() * params.r()) / (8 * params.m()));
    case Regime::FullOnly: break;
  }
  throw Error(ErrorKind::FullFormulaRequired,
              "b/d < 2 (" + params.describe() + "): only the full formula applies");
}

AsympEstimate asymp_simplified(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx) {
  require_n(n);
  const mpq_class log_c = correction_constant(params);
  const PrecisionContext wide = log_space_context(ctx, n);
  const Bits bits = wide.working_bits();
  const Real nr = from_u64(n, bits);
  const Real w = lambert_w0(nr * mpq_class(1 / params.m()), wide);
  const Real n_over_w = nr / w;
  const Real b(params.b(), bits);
  const Real value = nr * (log(b) + log(nr) - log(w)) + log_c +
                     pow(n_over_w * mpq_class(1 / params.m()), mpq_class(params.d() / params.b())) * params.r() +
                     n_over_w - nr + params.s() - log(w + 1L) / 2L;
  return {n, Formula::Simplified, value, w * mpq_class(1 / params.b()), ctx};
}

AsympEstimate estimate(const EgfParams& params, std::uint64_t n, Formula formula, const PrecisionContext& ctx) {
  switch (formula) {
    case Formula::Full: return asymp_full(params, n, ctx);
    case Formula::Simplified: return asymp_simplified(params, n, ctx);
    case Formula::Hayman: return asymp_hayman(params, n, ctx);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown formula");
}

}  // namespace egfasym
