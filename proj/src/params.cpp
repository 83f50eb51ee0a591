#include "egfasym/params.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "egfasym/error.hpp"

namespace egfasym {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::FullOnly: return "full-only";
    case Regime::Boundary: return "boundary";
    case Regime::Super: return "super";
  }
  return "unknown";
}

bool EgfParams::outside_worked_examples() const {
  return b_.get_den() != 1 || d_.get_den() != 1;
}

std::string EgfParams::describe() const {
  return "m=" + m_.get_str() + " b=" + b_.get_str() + " d=" + d_.get_str() + " r=" + r_.get_str() +
         " s=" + s_.get_str();
}

EgfParams validate(const mpq_class& m, const mpq_class& b, const mpq_class& d, const mpq_class& r,
                   const mpq_class& s) {
  if (sgn(m) <= 0) throw Error(ErrorKind::NonPositiveM, "m must be > 0, got " + m.get_str());
  if (d < 1) throw Error(ErrorKind::OrderViolation, "d must be >= 1, got " + d.get_str());
  if (b <= d) {
    throw Error(ErrorKind::OrderViolation,
                "b must exceed d, got b=" + b.get_str() + " d=" + d.get_str());
  }
  if (sgn(r) == 0) throw Error(ErrorKind::ZeroR, "r must be nonzero");
  return EgfParams(m, b, d, r, s);
}

Regime classify_regime(const EgfParams& params) {
  // b/d vs 2 without division: d > 0 after validation.
  const int c = cmp(params.b(), 2 * params.d());
  if (c < 0) return Regime::FullOnly;
  if (c == 0) return Regime::Boundary;
  return Regime::Super;
}

mpq_class parse_rational(std::string_view text) {
  auto fail = [&]() -> mpq_class {
    throw Error(ErrorKind::InvalidNumber, "not a rational literal: '" + std::string(text) + "'");
  };
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto to_mpz = [](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    return mpz_class(std::string(t), 10);
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') return fail();
    mpz_class q = to_mpz(den);
    if (q == 0) return fail();
    mpq_class out(to_mpz(num), q);
    out.canonicalize();
    return out;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    const bool whole_ok = is_int(whole) || whole.empty() || whole == "-" || whole == "+";
    const bool frac_ok = !frac.empty() &&
                         std::all_of(frac.begin(), frac.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!whole_ok || !frac_ok) return fail();
    const bool negative = !whole.empty() && whole.front() == '-';
    std::string digits;
    for (char c : whole) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    }
    digits += frac;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class out(mpz_class(digits, 10), scale);
    out.canonicalize();
    return negative ? mpq_class(-out) : out;
  }
  if (!is_int(text)) return fail();
  return mpq_class(to_mpz(text));
}

std::span<const NamedFamily> known_families() {
  static const std::vector<NamedFamily> table = {
      {"A143405", "exp(exp(x)*(exp(x)-1))", validate(1, 2, 1, -1, 0)},
      {"A355291", "exp(exp(x)*(exp(x)+1)-2)", validate(1, 2, 1, 1, -2)},
      {"A002872", "exp((exp(2x)-3)/2+exp(x))", validate(mpq_class(1, 2), 2, 1, 1, mpq_class(-3, 2))},
      {"A002874", "exp((exp(3x)-4)/3+exp(x))", validate(mpq_class(1, 3), 3, 1, 1, mpq_class(-4, 3))},
  };
  return table;
}

std::optional<NamedFamily> find_family(std::string_view anum) {
  for (const auto& f : known_families()) {
    if (f.anum == anum) return f;
  }
  return std::nullopt;
}

}  // namespace egfasym
