#include "doctest.h"
#include "egfasym/asymptotics.hpp"
#include "egfasym/error.hpp"
#include "egfasym/saddle.hpp"
#include "egfasym/series.hpp"
#include "test_support.hpp"

using namespace egfasym;
using egfasym::testing::family;
using egfasym::testing::pow10;

namespace {

Real log_exact(const EgfParams& p, std::size_t n, Bits bits) {
  const CoeffTable t = egf_coefficients(p, n);
  return log(t.value(n, bits)) + p.prefactor_exponent();
}

// Closed forms for the four sequences, written out by hand and coded
// independently of asymp_simplified.
Real transcribed_log(const std::string& anum, std::uint64_t n_int, const PrecisionContext& ctx) {
  const PrecisionContext wide = log_space_context(ctx, n_int);
  const Bits bits = wide.working_bits();
  const Real n(static_cast<long>(n_int), bits);
  if (anum == "A143405" || anum == "A355291") {
    const Real w = lambert_w0(n, wide);
    const Real c = anum == "A143405" ? Real(-1L, bits) / 8L : Real(-17L, bits) / 8L;
    const Real sgn_sqrt = anum == "A143405" ? -sqrt(n / w) : sqrt(n / w);
    // 2^n e^{c - n -+ sqrt(n/W) + n/W} n^n W^{-n} / sqrt(1 + W)
    return n * log(Real(2L, bits)) + c - n + sgn_sqrt + n / w + n * log(n) - n * log(w) - log(w + 1L) / 2L;
  }
  if (anum == "A002872") {
    const Real w = lambert_w0(2L * n, wide);
    // 2^n e^{-7/4 - n + sqrt2 sqrt(n/W(2n)) + n/W(2n)} (n/W(2n))^n / sqrt(1 + W(2n))
    return n * log(Real(2L, bits)) + Real(-7L, bits) / 4L - n + sqrt(Real(2L, bits)) * sqrt(n / w) + n / w +
           n * log(n / w) - log(w + 1L) / 2L;
  }
  const Real w = lambert_w0(3L * n, wide);
  // 3^n e^{-4/3 - n + 3^{1/3} (n/W(3n))^{1/3} + n/W(3n)} (n/W(3n))^n / sqrt(1 + W(3n))
  const Real third = Real(1L, bits) / 3L;
  return n * log(Real(3L, bits)) + Real(-4L, bits) / 3L - n + pow(Real(3L, bits), third) * pow(n / w, third) +
         n / w + n * log(n / w) - log(w + 1L) / 2L;
}

}  // namespace

TEST_CASE("Hayman estimate with the exact factorial at the true saddle") {
  const PrecisionContext ctx(40);
  const auto& p = family("A143405");
  const SaddlePoint sp = saddle_solve(p, 50, ctx);
  const AsympEstimate est = hayman_estimate(p, 50, sp.z, ctx, FactorialMode::Exact);
  const Bits bits = est.log_value.precision();
  const Real ratio = exp(log_exact(p, 50, bits) - est.log_value);
  CHECK(abs(ratio - 1L) < Real(0.03, bits));
}

TEST_CASE("factorial modes differ by n!/stirling(n)") {
  const PrecisionContext ctx(40);
  const auto& p = family("A002874");
  for (std::uint64_t n : {1u, 2u, 10u, 300u}) {
    const Real z = saddle_solve(p, n, ctx).z;
    const Real diff = hayman_estimate(p, n, z, ctx, FactorialMode::Exact).log_value -
                      hayman_estimate(p, n, z, ctx, FactorialMode::Stirling).log_value;
    const Real factor = exp(diff);
    CHECK(factor > 1L);
    CHECK(factor <= Real(1.09, 64));
    CHECK(abs(diff - (log_factorial(n, ctx) - log_stirling_factorial(n, ctx))) < pow10(-38, 200));
  }
}

TEST_CASE("the saddle minimizes G(z)/z^n over a grid") {
  const PrecisionContext ctx(40);
  const auto& p = family("A355291");
  const std::uint64_t n = 200;
  const Real zstar = saddle_solve(p, n, ctx).z;
  const Bits bits = zstar.precision();
  auto log_g_over_zn = [&](const Real& z) {
    return exp(z * p.b()) * p.m() + exp(z * p.d()) * p.r() + p.s() - Real(static_cast<long>(n), bits) * log(z);
  };
  Real best = log_g_over_zn(zstar);
  Real best_z = zstar;
  const Real step = zstar * Real(1.5, bits) / 300L;
  for (int i = 0; i <= 300; ++i) {
    const Real z = zstar / 2L + step * static_cast<long>(i);
    const Real v = log_g_over_zn(z);
    if (v < best) {
      best = v;
      best_z = z;
    }
  }
  CHECK(abs(best_z - zstar) <= step);
  // different z inputs give different estimates
  CHECK(hayman_estimate(p, n, zstar, ctx).log_value != hayman_estimate(p, n, zstar * 2L, ctx).log_value);
  CHECK_THROWS_AS(hayman_estimate(validate(1, 2, 1, -50, 0), 3, Real(0.01, 64), ctx), Error);
}

TEST_CASE("full formula") {
  const PrecisionContext ctx(64);
  const auto& p = family("A143405");
  const AsympEstimate full = asymp_full(p, 500, ctx);
  const Bits bits = full.log_value.precision();
  const Real ratio = exp(log_exact(p, 500, bits) - full.log_value);
  CHECK(ratio < 1L);
  CHECK(abs(ratio - 1L) < Real(1e-3, bits));

  // the displayed formula is the Hayman estimate at the closed-form z with Stirling's n!
  const Real z = saddle_closed_form(p, 500, log_space_context(ctx, 500));
  const AsympEstimate hay = hayman_estimate(p, 500, z, ctx, FactorialMode::Stirling);
  CHECK(abs(full.log_value - hay.log_value) <= pow10(-64, bits) * abs(hay.log_value));

  const AsympEstimate big = asymp_full(family("A002874"), 1000, ctx);
  CHECK(big.log_value.is_finite());
  CHECK(big.log10_value() > 2000L);
  const std::string r = big.rendered();
  CHECK(r.find('e') != std::string::npos);
  CHECK(std::stol(r.substr(r.find('e') + 1)) > 2000);
}

TEST_CASE("correction constant") {
  CHECK(correction_constant(family("A143405")) == mpq_class(-1, 8));
  CHECK(correction_constant(family("A002874")) == 0);
  CHECK(correction_constant(family("A002872")) == mpq_class(-1, 4));
  CHECK(correction_constant(family("A002872")) + family("A002872").s() == mpq_class(-7, 4));
  try {
    correction_constant(validate(1, 3, 2, 1, -2));
    FAIL("expected FullFormulaRequired");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FullFormulaRequired);
  }
}

TEST_CASE("simplified formula specializes to hand-transcribed closed forms") {
  const PrecisionContext ctx(60);
  for (const auto& f : known_families()) {
    for (std::uint64_t n : {10u, 100u, 1000u}) {
      CAPTURE(f.anum);
      CAPTURE(n);
      const Real mine = asymp_simplified(f.params, n, ctx).log_value;
      const Real ref = transcribed_log(std::string(f.anum), n, ctx);
      CHECK(abs(mine - ref) <= pow10(-40, mine.precision()) * abs(ref));
    }
  }
}

TEST_CASE("full and simplified agree more closely as n grows") {
  // the gap is not monotone below 1e4 for A143405
  const PrecisionContext ctx(40);
  for (const auto& f : known_families()) {
    CAPTURE(f.anum);
    Real prev(1e9, 64);
    for (std::uint64_t n : {10000ull, 100000ull, 1000000ull}) {
      const Real gap = abs(exp(asymp_full(f.params, n, ctx).log_value - asymp_simplified(f.params, n, ctx).log_value) - 1L);
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("log values are stable under extra precision") {
  const PrecisionContext lo(40), hi(60);
  for (Formula formula : {Formula::Full, Formula::Simplified, Formula::Hayman}) {
    for (std::uint64_t n : {7u, 500u, 20000u}) {
      const Real a = estimate(family("A002872"), n, formula, lo).log_value;
      const Real b = estimate(family("A002872"), n, formula, hi).log_value;
      CHECK(abs(a - b) <= pow10(-40, 400) * abs(b));
    }
  }
}

TEST_CASE("rendering") {
  CHECK(render_from_log(log(Real(12345L, 200)), 20) == "1.2345000000000000000e4");
  CHECK(render_from_log(Real(0L, 200), 20) == "1.0000000000000000000e0");
  CHECK(render_from_log(log(Real(9.9999999999, 200)), 5) == "1.0000e1");
  CHECK(render_from_log(log(Real(0.00025, 200)), 3) == "2.50e-4");
  CHECK(parse_formula("hayman") == Formula::Hayman);
  CHECK_THROWS_AS(parse_formula("exact"), Error);
}
