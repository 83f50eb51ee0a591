#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "egfasym/params.hpp"
#include "egfasym/real.hpp"

namespace egfasym {

struct CoeffMode {
  enum class Kind { Exact, Float };
  Kind kind = Kind::Exact;
  int digits = 0;  // Float only

  static CoeffMode exact() { return {Kind::Exact, 0}; }
  static CoeffMode floating(int digits = 64) { return {Kind::Float, digits}; }
  bool is_exact() const { return kind == Kind::Exact; }
};

struct SeriesOptions {
  std::size_t max_terms = 100000;
};

/// a(0..N) of exp(m e^{bx} + r e^{dx} + s), normalized so a(0) = 1; the
/// dropped factor is e^{prefactor_exponent()}.
class CoeffTable {
 public:
  CoeffTable(EgfParams params, std::vector<mpq_class> exact);
  CoeffTable(EgfParams params, int digits, std::vector<Real> floats);

  const EgfParams& params() const { return params_; }
  CoeffMode mode() const { return mode_; }
  bool normalized() const { return true; }
  mpq_class prefactor_exponent() const { return params_.prefactor_exponent(); }

  std::size_t size() const;
  /// Exact values; throws NotExactMode in Float mode.
  const std::vector<mpq_class>& exact() const;
  const std::vector<Real>& floats() const { return floats_; }

  /// Exact: integer or "p/q" string; Float: `digits` significant digits.
  std::string value_string(std::size_t n) const;
  /// Normalized a(n) as a float with `bits` of precision.
  Real value(std::size_t n, Bits bits) const;

 private:
  EgfParams params_;
  CoeffMode mode_;
  std::vector<mpq_class> exact_;
  std::vector<Real> floats_;
};

/// a(n+1) = sum_{k<=n} C(n,k) (m b^{k+1} + r d^{k+1}) a(n-k), a(0) = 1.
CoeffTable egf_coefficients(const EgfParams& params, std::size_t max_index,
                            CoeffMode mode = CoeffMode::exact(), const SeriesOptions& options = {});

/// Independent check: exponentiates the truncated inner series term by term
/// in rational arithmetic. max_index <= 24.
CoeffTable taylor_oracle(const EgfParams& params, std::size_t max_index);

inline constexpr std::size_t kTaylorOracleLimit = 24;

/// "n,value" rows with a header.
void write_csv(std::ostream& out, const CoeffTable& table);
/// {"n": 0, "value": "1"} per line.
void write_jsonl(std::ostream& out, const CoeffTable& table);

}  // namespace egfasym
