#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace egfasym {

using Bits = mpfr_prec_t;

/// Smallest binary precision holding `digits` significant decimal digits.
Bits bits_for_digits(int digits);

/// Owning wrapper around an MPFR float. Every value carries its own
/// precision; binary operations produce the wider of the two operands.
class Real {
 public:
  explicit Real(Bits prec = 64);
  Real(long value, Bits prec);
  Real(double value, Bits prec);
  Real(const mpz_class& value, Bits prec);
  Real(const mpq_class& value, Bits prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal ("1.25", "-3e-7").
  static Real parse(const std::string& text, Bits prec);

  Bits precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded (or widened) to `prec` bits.
  Real with_precision(Bits prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  /// `digits` significant decimal digits, positional when the decimal
  /// exponent is moderate and "<d.ddd>e<exp>" otherwise.
  std::string to_string(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);

  friend Real operator*(const Real& a, const mpq_class& b);
  friend Real operator*(const mpq_class& a, const Real& b) { return b * a; }
  friend Real operator+(const Real& a, const mpq_class& b);
  friend Real operator+(const mpq_class& a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, const mpq_class& b) { return a + mpq_class(-b); }
  friend Real operator*(const Real& a, const mpz_class& b);
  friend Real operator*(const mpz_class& a, const Real& b) { return b * a; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t v_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real log1p(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real floor(const Real& x);
Real pow(const Real& base, const Real& exponent);
/// base^q for base > 0, computed as exp(q * log(base)).
Real pow(const Real& base, const mpq_class& exponent);
Real pi(Bits prec);
/// ln 10 at the requested precision.
Real ln10(Bits prec);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Decimal rendering of an exact rational: integers verbatim, else "p/q".
std::string to_string(const mpq_class& q);

}  // namespace egfasym
