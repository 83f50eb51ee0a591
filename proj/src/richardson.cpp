#include "egfasym/richardson.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <ostream>
#include <thread>

#include "egfasym/error.hpp"

namespace egfasym {

Real ratio_at(const CoeffTable& coeffs, std::size_t n, Formula formula, const PrecisionContext& ctx) {
  if (n == 0 || n >= coeffs.size()) throw Error(ErrorKind::InvalidArgument, "ratio index out of range");
  const AsympEstimate est = estimate(coeffs.params(), n, formula, ctx);
  const Bits bits = est.log_value.precision();
  const Real a = coeffs.value(n, bits);
  if (a.sign() <= 0) {
    throw Error(ErrorKind::InvalidArgument, "a(" + std::to_string(n) + ") is not positive; ratio undefined");
  }
  return exp(log(a) + coeffs.prefactor_exponent() - est.log_value).with_precision(ctx.working_bits());
}

RatioSeries ratio_series(const CoeffTable& coeffs, Formula formula, const PrecisionContext& ctx,
                         std::string label, unsigned jobs) {
  if (coeffs.size() < 2) throw Error(ErrorKind::InvalidArgument, "ratio_series needs a(1) at least");
  const EgfParams& params = coeffs.params();
  if (formula == Formula::Simplified) correction_constant(params);  // regime gate up front

  const std::size_t length = coeffs.size() - 1;
  std::vector<Real> ratios(length, Real(ctx.working_bits()));

  auto compute = [&](std::size_t n) { ratios[n - 1] = ratio_at(coeffs, n, formula, ctx); };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(length)));
  if (jobs == 1) {
    for (std::size_t n = 1; n <= length; ++n) compute(n);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t n = 1 + t; n <= length; n += jobs) compute(n);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return {std::move(label), formula, std::move(ratios), ctx};
}

std::vector<mpq_class> richardson_weights(unsigned order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  std::vector<mpq_class> w;
  w.reserve(order);
  // (j-1)! (m-j)! updated incrementally in j
  mpz_class left = 1;  // (j-1)!
  mpz_class right;     // (m-j)!
  mpz_fac_ui(right.get_mpz_t(), order - 1);
  for (unsigned j = 1; j <= order; ++j) {
    mpz_class jp;
    mpz_ui_pow_ui(jp.get_mpz_t(), j, order - 1);
    mpq_class q(jp, left * right);
    q.canonicalize();
    if ((order + j) % 2 == 1) q = -q;
    w.push_back(std::move(q));
    left *= j;
    if (j < order) right /= (order - j);
  }
  return w;
}

namespace {

std::size_t sample_step(std::size_t length, unsigned order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  if (order > length) {
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(order) + " exceeds series length " + std::to_string(length));
  }
  return length / order;
}

}  // namespace

Real richardson_extrapolate(std::span<const Real> f, unsigned order, const PrecisionContext& ctx) {
  const std::size_t h = sample_step(f.size(), order);
  const int digits = std::max(ctx.digits(), 2 * static_cast<int>(order));
  const Bits bits = PrecisionContext(digits, ctx.guard()).working_bits();
  const auto w = richardson_weights(order);
  Real sum(bits);
  for (unsigned j = 1; j <= order; ++j) {
    sum += f[j * h - 1].with_precision(bits) * w[j - 1];
  }
  return sum;
}

mpq_class richardson_extrapolate(std::span<const mpq_class> f, unsigned order) {
  const std::size_t h = sample_step(f.size(), order);
  const auto w = richardson_weights(order);
  mpq_class sum = 0;
  for (unsigned j = 1; j <= order; ++j) sum += f[j * h - 1] * w[j - 1];
  return sum;
}

ExtrapolationReport extrapolation_table(std::span<const Real> f, std::span<const unsigned> orders,
                                        const PrecisionContext& ctx) {
  ExtrapolationReport report{{}, {}, Real(1L, ctx.working_bits()), ctx};
  for (unsigned order : orders) sample_step(f.size(), order);
  for (unsigned order : orders) {
    report.orders.push_back(order);
    report.extrapolants.push_back(richardson_extrapolate(f, order, ctx));
  }
  return report;
}

void write_report(std::ostream& out, const ExtrapolationReport& report) {
  for (std::size_t i = 0; i < report.orders.size(); ++i) {
    out << report.orders[i] << ' ' << report.extrapolants[i].to_string(report.ctx.digits()) << '\n';
  }
}

std::vector<unsigned> parse_orders(std::string_view text) {
  auto fail = [&]() -> std::vector<unsigned> {
    throw Error(ErrorKind::InvalidArgument, "bad order list '" + std::string(text) + "'");
  };
  auto num = [&](std::string_view t) -> unsigned {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size() || v == 0) fail();
    return v;
  };
  std::vector<unsigned> out;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) return fail();
    const unsigned lo = num(text.substr(0, c1));
    const unsigned hi = num(text.substr(c1 + 1, c2 - c1 - 1));
    const unsigned step = num(text.substr(c2 + 1));
    if (hi < lo) return fail();
    for (unsigned v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(num(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace egfasym
