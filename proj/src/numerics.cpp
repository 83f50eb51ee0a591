#include "egfasym/numerics.hpp"

#include <cmath>
#include <vector>

#include "egfasym/error.hpp"

namespace egfasym {

namespace {

// Headroom for quantities whose absolute error must beat a relative target
// after being exponentiated (n ln n sized exponents).
Bits magnitude_bits(double magnitude) {
  return magnitude > 1.0 ? static_cast<Bits>(std::ceil(std::log2(magnitude))) + 8 : 8;
}

}  // namespace

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < 16) throw Error(ErrorKind::InvalidArgument, "digits must be >= 16");
  if (guard < 0) throw Error(ErrorKind::InvalidArgument, "guard must be >= 0");
}

Real PrecisionContext::working_epsilon() const {
  const Bits bits = working_bits();
  return pow(Real(10L, bits), mpq_class(-(digits_ + guard_)));
}

Real lambert_w0(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() < 0) throw Error(ErrorKind::NegativeArgument, "lambert_w0 needs x >= 0");
  const Bits out_bits = ctx.working_bits();
  if (x.is_zero()) return Real(out_bits);

  const Bits bits = out_bits + 32;
  const Real xw = x.with_precision(bits);
  const Real e = exp(Real(1L, bits));
  Real w = xw < e ? xw : log(xw) - log(log(xw));
  const Real tol = ctx.working_epsilon().with_precision(bits);

  for (int iter = 0; iter < 200; ++iter) {
    const Real ew = exp(w);
    const Real f = w * ew - xw;
    const Real w1 = w + 1L;
    // Halley: w - f / (e^w (w+1) - (w+2) f / (2w+2))
    const Real step = f / (ew * w1 - (w + 2L) * f / (2L * w1));
    w -= step;
    if (abs(step) <= tol * abs(w)) return w.with_precision(out_bits);
  }
  throw Error(ErrorKind::NoConvergence, "lambert_w0 did not converge for x=" + x.to_string(20));
}

Real log_stirling_factorial(std::uint64_t n, const PrecisionContext& ctx) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "stirling_factorial needs n >= 1");
  const double nd = static_cast<double>(n);
  const Bits bits = ctx.working_bits() + magnitude_bits(nd * std::log(nd + 1.0));
  const Real nr(static_cast<long>(n), bits);
  const Real out = nr * log(nr) - nr + log(2L * pi(bits) * nr) / 2L;
  return out.with_precision(ctx.working_bits() + magnitude_bits(nd * std::log(nd + 1.0)));
}

Real stirling_factorial(std::uint64_t n, const PrecisionContext& ctx) {
  return exp(log_stirling_factorial(n, ctx)).with_precision(ctx.working_bits());
}

Real log_factorial_series(std::uint64_t n, const PrecisionContext& ctx) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "log_factorial needs n >= 1");
  const double nd = static_cast<double>(n);
  const Bits bits = ctx.working_bits() + magnitude_bits(nd * std::log(nd + 1.0));
  const Real nr(static_cast<long>(n), bits);
  Real sum = log_stirling_factorial(n, ctx).with_precision(bits);
  const Real tol = abs(sum) * ctx.working_epsilon().with_precision(bits);

  // Bernoulli numbers from sum_{j<=k} C(k+1, j) B_j = 0, extended on demand.
  std::vector<mpq_class> bern{mpq_class(1)};
  auto bernoulli = [&](std::size_t k) -> const mpq_class& {
    while (bern.size() <= k) {
      const std::size_t kk = bern.size();
      mpq_class acc(0);
      mpz_class binom(1);  // C(kk+1, 0)
      for (std::size_t j = 0; j < kk; ++j) {
        acc += binom * bern[j];
        binom = binom * static_cast<unsigned long>(kk + 1 - j) / static_cast<unsigned long>(j + 1);
      }
      bern.push_back(mpq_class(-acc / mpq_class(static_cast<unsigned long>(kk + 1))));
    }
    return bern[k];
  };

  // sum_k B_{2k} / (2k (2k-1) n^{2k-1}); asymptotic, stop at the smallest term.
  Real npow = nr;
  const Real n2 = nr * nr;
  Real prev_mag(bits);
  for (unsigned long k = 1; k < 4096; ++k) {
    const mpq_class coeff = bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1));
    const Real term = Real(coeff, bits) / npow;
    if (k > 1 && abs(term) >= prev_mag) break;
    sum += term;
    if (abs(term) <= tol) break;
    prev_mag = abs(term);
    npow *= n2;
  }
  return sum;
}

Real log_factorial(std::uint64_t n, const PrecisionContext& ctx) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "log_factorial needs n >= 1");
  if (n > kExactLogFactorialLimit) return log_factorial_series(n, ctx);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  const double nd = static_cast<double>(n);
  const Bits bits = ctx.working_bits() + magnitude_bits(nd * std::log(nd + 1.0));
  return log(Real(f, bits + 8));
}

}  // namespace egfasym
