#include "egfasym/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "egfasym/error.hpp"

namespace egfasym {

namespace {

struct ExponentRange {
  ExponentRange() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  }
};
const ExponentRange widen_exponent_range;

Bits wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Bits bits_for_digits(int digits) {
  return static_cast<Bits>(std::ceil(digits * 3.321928094887362)) + 1;
}

Real::Real(Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(const std::string& text, Bits prec) {
  Real r(prec);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    throw Error(ErrorKind::InvalidNumber, "not a decimal number: '" + text + "'");
  }
  return r;
}

Real Real::with_precision(Bits prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN), mpfr_free_str);
  std::string mant(raw.get());
  std::string out;
  if (!mant.empty() && mant.front() == '-') {
    out = "-";
    mant.erase(0, 1);
  }
  // value = 0.<mant> * 10^exp10
  if (exp10 > 0 && exp10 <= digits) {
    out += mant.substr(0, static_cast<size_t>(exp10));
    if (static_cast<size_t>(exp10) < mant.size()) out += "." + mant.substr(static_cast<size_t>(exp10));
  } else if (exp10 <= 0 && exp10 > -5) {
    out += "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
  } else {
    out += mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
  }
  return out;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const mpq_class& b) {
  Real r(a.precision());
  mpfr_mul_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, const mpq_class& b) {
  Real r(a.precision());
  mpfr_add_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const mpz_class& b) {
  Real r(a.precision());
  mpfr_mul_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define EGFASYM_UNARY(name, fn)              \
  Real name(const Real& x) {                 \
    Real r(x.precision());                   \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

EGFASYM_UNARY(exp, mpfr_exp)
EGFASYM_UNARY(log, mpfr_log)
EGFASYM_UNARY(log10, mpfr_log10)
EGFASYM_UNARY(log1p, mpfr_log1p)
EGFASYM_UNARY(sqrt, mpfr_sqrt)
EGFASYM_UNARY(abs, mpfr_abs)

#undef EGFASYM_UNARY

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const mpq_class& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    Real r(base.precision());
    mpfr_pow_si(r.get(), base.get(), exponent.get_num().get_si(), MPFR_RNDN);
    return r;
  }
  return exp(log(base) * exponent);
}

Real pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real ln10(Bits prec) { return log(Real(10L, prec)); }

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

std::string to_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace egfasym
