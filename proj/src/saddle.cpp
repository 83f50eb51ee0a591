#include "egfasym/saddle.hpp"

#include "egfasym/error.hpp"

namespace egfasym {

std::string_view to_string(SaddleMethod method) {
  switch (method) {
    case SaddleMethod::MainTerm: return "main-term";
    case SaddleMethod::NewtonOnce: return "newton-once";
    case SaddleMethod::NewtonConverged: return "newton-converged";
  }
  return "unknown";
}

namespace {

struct Terms {
  Real bm_ebz;  // b m e^{bz}
  Real dr_edz;  // d r e^{dz}
  Real bz;
  Real dz;
};

Terms terms(const EgfParams& p, const Real& z) {
  const Real bz = z * p.b();
  const Real dz = z * p.d();
  return {exp(bz) * (p.b() * p.m()), exp(dz) * mpq_class(p.d() * p.r()), bz, dz};
}

Real from_u64(std::uint64_t n, Bits bits) { return Real(mpz_class(std::to_string(n)), bits); }

}  // namespace

Real saddle_residual(const EgfParams& params, const Real& n, const Real& z) {
  const Terms t = terms(params, z);
  return (t.bm_ebz + t.dr_edz) * z - n;
}

Real saddle_derivative(const EgfParams& params, const Real& z) {
  const Terms t = terms(params, z);
  return t.bm_ebz * (t.bz + 1L) + t.dr_edz * (t.dz + 1L);
}

Real hayman_a(const EgfParams& params, const Real& z) {
  const Terms t = terms(params, z);
  return (t.bm_ebz + t.dr_edz) * z;
}

Real hayman_b(const EgfParams& params, const Real& z) { return saddle_derivative(params, z) * z; }

Real saddle_main_term(const EgfParams& params, const Real& n, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits();
  const Real x = Real(n.with_precision(bits)) * mpq_class(1 / params.m());
  return lambert_w0(x, ctx) * mpq_class(1 / params.b());
}

Real saddle_main_term(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx) {
  return saddle_main_term(params, from_u64(n, ctx.working_bits()), ctx);
}

Real saddle_newton_refine(const EgfParams& params, const Real& n, const Real& z_in,
                          const PrecisionContext& ctx) {
  if (z_in.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "saddle_newton_refine needs z > 0");
  const Bits bits = ctx.working_bits();
  const Real z = z_in.with_precision(bits);
  const Terms t = terms(params, z);
  const Real b_part = t.bm_ebz * (t.bz + 1L);
  const Real d_part = t.dr_edz * (t.dz + 1L);
  const Real fprime = b_part + d_part;
  const Real scale = abs(b_part) + abs(d_part);
  if (fprime.is_zero() || abs(fprime) <= scale * ctx.working_epsilon()) {
    throw Error(ErrorKind::DerivativeVanishes, "f'(z) cancels at z=" + z.to_string(20));
  }
  const Real f = (t.bm_ebz + t.dr_edz) * z - n.with_precision(bits);
  return z - f / fprime;
}

Real saddle_newton_refine(const EgfParams& params, std::uint64_t n, const Real& z_in,
                          const PrecisionContext& ctx) {
  return saddle_newton_refine(params, from_u64(n, ctx.working_bits()), z_in, ctx);
}

Real saddle_closed_form(const EgfParams& params, const Real& n_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits();
  const Real n = n_in.with_precision(bits);
  const Real w = lambert_w0(n * mpq_class(1 / params.m()), ctx);
  const mpq_class q = params.d() / params.b();
  const Real m(params.m(), bits);
  const mpq_class b = params.b();
  const mpq_class d = params.d();

  // b^2 m^{d/b} n^{1-d/b} (W+1) W^{d/b-2} / (d r) + b/W + d
  const Real first =
      pow(m, q) * pow(n, mpq_class(1 - q)) * (w + 1L) * pow(w, mpq_class(q - 2)) * mpq_class(b * b / (d * params.r()));
  const Real denom = first + Real(b, bits) / w + d;
  return w * mpq_class(1 / b) - 1L / denom;
}

Real saddle_closed_form(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx) {
  return saddle_closed_form(params, from_u64(n, ctx.working_bits()), ctx);
}

SaddlePoint saddle_solve(const EgfParams& params, const Real& n_in, const PrecisionContext& ctx,
                         std::optional<Real> tol, int max_iter) {
  const Bits bits = ctx.working_bits();
  const Real n = n_in.with_precision(bits);
  if (n.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "saddle_solve needs n > 0");
  const Real tolerance =
      tol ? tol->with_precision(bits) : pow(Real(10L, bits), mpq_class(-(ctx.digits() / 2)));
  if (tolerance.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");

  const Real z0 = saddle_main_term(params, n, ctx);
  Real z = z0;
  Real residual = saddle_residual(params, n, z);
  const Real limit = tolerance * n;

  // f(0) = -n < 0 and f has a single sign change on (0, inf), so keep a
  // bracket and fall back to bisection whenever Newton leaves it.
  Real lo(0L, bits);
  Real hi = z0;
  while (saddle_residual(params, n, hi).sign() < 0) {
    lo = hi;
    hi = hi * 2L;
  }
  if (residual.sign() < 0) lo = max(lo, z);

  int iter = 0;
  while (abs(residual) > limit) {
    if (iter == max_iter) {
      throw Error(ErrorKind::NoConvergence, "saddle_solve: residual " + residual.to_string(10) +
                                                " after " + std::to_string(max_iter) + " iterations");
    }
    Real next = (lo + hi) / 2L;
    if (saddle_derivative(params, z).sign() > 0) {
      Real step = z - residual / saddle_derivative(params, z);
      if (step > lo && step < hi) next = std::move(step);
    }
    z = std::move(next);
    residual = saddle_residual(params, n, z);
    (residual.sign() < 0 ? lo : hi) = z;
    ++iter;
  }
  return SaddlePoint{n, z0, z, residual, SaddleMethod::NewtonConverged, iter};
}

SaddlePoint saddle_solve(const EgfParams& params, std::uint64_t n, const PrecisionContext& ctx,
                         std::optional<Real> tol, int max_iter) {
  return saddle_solve(params, from_u64(n, ctx.working_bits()), ctx, std::move(tol), max_iter);
}

}  // namespace egfasym
