#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace egfasym {

/// Which asymptotic formula shapes are valid, decided by b/d against 2.
enum class Regime {
  FullOnly,  // b/d < 2
  Boundary,  // b/d = 2
  Super,     // b/d > 2
};

std::string_view to_string(Regime regime);

/// Parameters of the e.g.f. exp(m e^{bx} + r e^{dx} + s). Only obtainable
/// through validate(), so holding one means m > 0, b > d >= 1, r != 0.
class EgfParams {
 public:
  const mpq_class& m() const { return m_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& d() const { return d_; }
  const mpq_class& r() const { return r_; }
  const mpq_class& s() const { return s_; }

  /// Exponent of the scalar prefactor e^{m+r+s} split off from a(0).
  mpq_class prefactor_exponent() const { return m_ + r_ + s_; }

  /// True when b or d is not an integer; all worked examples use integers.
  bool outside_worked_examples() const;

  std::string describe() const;

  friend bool operator==(const EgfParams&, const EgfParams&) = default;

 private:
  friend EgfParams validate(const mpq_class&, const mpq_class&, const mpq_class&,
                            const mpq_class&, const mpq_class&);
  EgfParams(mpq_class m, mpq_class b, mpq_class d, mpq_class r, mpq_class s)
      : m_(std::move(m)), b_(std::move(b)), d_(std::move(d)), r_(std::move(r)), s_(std::move(s)) {}

  mpq_class m_, b_, d_, r_, s_;
};

/// Throws Error{NonPositiveM | OrderViolation | ZeroR} naming the violated constraint.
EgfParams validate(const mpq_class& m, const mpq_class& b, const mpq_class& d, const mpq_class& r,
                   const mpq_class& s);

Regime classify_regime(const EgfParams& params);

/// Accepts "p/q", integers and finite decimals ("-1.5" -> -3/2).
mpq_class parse_rational(std::string_view text);

struct NamedFamily {
  std::string_view anum;
  std::string_view egf;
  EgfParams params;
};

/// The sequences whose parameter mappings are given with the main result.
std::span<const NamedFamily> known_families();
std::optional<NamedFamily> find_family(std::string_view anum);

}  // namespace egfasym
