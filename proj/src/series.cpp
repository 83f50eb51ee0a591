#include "egfasym/series.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "egfasym/error.hpp"

namespace egfasym {

CoeffTable::CoeffTable(EgfParams params, std::vector<mpq_class> exact)
    : params_(std::move(params)), mode_(CoeffMode::exact()), exact_(std::move(exact)) {}

CoeffTable::CoeffTable(EgfParams params, int digits, std::vector<Real> floats)
    : params_(std::move(params)), mode_(CoeffMode::floating(digits)), floats_(std::move(floats)) {}

std::size_t CoeffTable::size() const { return mode_.is_exact() ? exact_.size() : floats_.size(); }

const std::vector<mpq_class>& CoeffTable::exact() const {
  if (!mode_.is_exact()) throw Error(ErrorKind::NotExactMode, "coefficient table is in Float mode");
  return exact_;
}

std::string CoeffTable::value_string(std::size_t n) const {
  if (mode_.is_exact()) return exact_.at(n).get_str(10);
  std::string s = floats_.at(n).to_string(mode_.digits);
  // coefficients are integers in the common case: drop a zero fraction
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find('e') == std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

Real CoeffTable::value(std::size_t n, Bits bits) const {
  return mode_.is_exact() ? Real(exact_.at(n), bits) : floats_.at(n).with_precision(bits);
}

namespace {

std::vector<mpq_class> recurrence_weights(const EgfParams& p, std::size_t count) {
  std::vector<mpq_class> w;
  w.reserve(count);
  mpq_class bp = p.b();
  mpq_class dp = p.d();
  for (std::size_t k = 0; k < count; ++k) {
    w.emplace_back(p.m() * bp + p.r() * dp);
    bp *= p.b();
    dp *= p.d();
  }
  return w;
}

std::vector<mpq_class> integer_recurrence(const std::vector<mpq_class>& wq, std::size_t max_index) {
  std::vector<mpz_class> w;
  w.reserve(wq.size());
  for (const auto& q : wq) w.push_back(q.get_num());

  std::vector<mpz_class> a;
  a.reserve(max_index + 1);
  a.emplace_back(1);
  std::vector<mpz_class> binom{mpz_class(1)};  // row n of Pascal's triangle
  mpz_class acc, cw;
  for (std::size_t n = 0; n < max_index; ++n) {
    acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_mul(cw.get_mpz_t(), binom[k].get_mpz_t(), w[k].get_mpz_t());
      mpz_addmul(acc.get_mpz_t(), cw.get_mpz_t(), a[n - k].get_mpz_t());
    }
    a.push_back(acc);
    binom.emplace_back(1);
    for (std::size_t k = n; k >= 1; --k) binom[k] += binom[k - 1];
  }
  std::vector<mpq_class> out;
  out.reserve(a.size());
  for (auto& v : a) out.emplace_back(v);
  return out;
}

std::vector<mpq_class> rational_recurrence(const std::vector<mpq_class>& w, std::size_t max_index) {
  std::vector<mpq_class> a;
  a.reserve(max_index + 1);
  a.emplace_back(1);
  std::vector<mpz_class> binom{mpz_class(1)};
  for (std::size_t n = 0; n < max_index; ++n) {
    mpq_class acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += binom[k] * w[k] * a[n - k];
    a.push_back(acc);
    binom.emplace_back(1);
    for (std::size_t k = n; k >= 1; --k) binom[k] += binom[k - 1];
  }
  return a;
}

std::vector<Real> float_recurrence(const std::vector<mpq_class>& wq, std::size_t max_index, Bits bits) {
  std::vector<Real> w;
  w.reserve(wq.size());
  for (const auto& q : wq) w.emplace_back(q, bits);

  std::vector<Real> a;
  a.reserve(max_index + 1);
  a.emplace_back(1L, bits);
  std::vector<Real> binom;
  binom.reserve(max_index + 1);
  binom.emplace_back(1L, bits);
  Real acc(bits), term(bits);
  for (std::size_t n = 0; n < max_index; ++n) {
    mpfr_set_zero(acc.get(), 1);
    for (std::size_t k = 0; k <= n; ++k) {
      mpfr_mul(term.get(), binom[k].get(), w[k].get(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), a[n - k].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    a.push_back(acc);
    binom.emplace_back(1L, bits);
    for (std::size_t k = n; k >= 1; --k) {
      mpfr_add(binom[k].get(), binom[k].get(), binom[k - 1].get(), MPFR_RNDN);
    }
  }
  return a;
}

}  // namespace

CoeffTable egf_coefficients(const EgfParams& params, std::size_t max_index, CoeffMode mode,
                            const SeriesOptions& options) {
  if (max_index > options.max_terms) {
    throw Error(ErrorKind::CapacityExceeded, "requested a(" + std::to_string(max_index) +
                                                 "), limit is " + std::to_string(options.max_terms));
  }
  const auto w = recurrence_weights(params, max_index);
  if (!mode.is_exact()) {
    if (mode.digits < 16) throw Error(ErrorKind::InvalidArgument, "float digits must be >= 16");
    return CoeffTable(params, mode.digits, float_recurrence(w, max_index, bits_for_digits(mode.digits + 10)));
  }
  const bool integral =
      std::all_of(w.begin(), w.end(), [](const mpq_class& q) { return q.get_den() == 1; });
  return CoeffTable(params, integral ? integer_recurrence(w, max_index) : rational_recurrence(w, max_index));
}

CoeffTable taylor_oracle(const EgfParams& params, std::size_t max_index) {
  if (max_index > kTaylorOracleLimit) {
    throw Error(ErrorKind::InvalidArgument, "taylor_oracle supports max_index <= 24");
  }
  const std::size_t len = max_index + 1;
  // g(x) = sum_{k>=1} (m b^k + r d^k) / k! x^k; the k = 0 term is the prefactor.
  std::vector<mpq_class> g(len, mpq_class(0));
  mpq_class bp = 1, dp = 1;
  mpz_class fact = 1;
  for (std::size_t k = 1; k < len; ++k) {
    bp *= params.b();
    dp *= params.d();
    fact *= static_cast<unsigned long>(k);
    g[k] = (params.m() * bp + params.r() * dp) / mpq_class(fact);
  }

  // exp(g) = sum_j g^j / j!; g has no constant term so j <= max_index suffices.
  std::vector<mpq_class> h(len, mpq_class(0));
  std::vector<mpq_class> power(len, mpq_class(0));
  power[0] = 1;
  mpz_class jfact = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) {
      jfact *= static_cast<unsigned long>(j);
      std::vector<mpq_class> next(len, mpq_class(0));
      for (std::size_t i = 0; i < len; ++i) {
        if (sgn(power[i]) == 0) continue;
        for (std::size_t k = 1; i + k < len; ++k) next[i + k] += power[i] * g[k];
      }
      power = std::move(next);
    }
    for (std::size_t i = 0; i < len; ++i) h[i] += power[i] / mpq_class(jfact);
  }

  std::vector<mpq_class> a(len);
  mpz_class nfact = 1;
  for (std::size_t n = 0; n < len; ++n) {
    if (n > 0) nfact *= static_cast<unsigned long>(n);
    a[n] = h[n] * nfact;
  }
  return CoeffTable(params, std::move(a));
}

void write_csv(std::ostream& out, const CoeffTable& table) {
  out << "n,value\n";
  for (std::size_t n = 0; n < table.size(); ++n) out << n << ',' << table.value_string(n) << '\n';
}

void write_jsonl(std::ostream& out, const CoeffTable& table) {
  for (std::size_t n = 0; n < table.size(); ++n) {
    out << nlohmann::json{{"n", n}, {"value", table.value_string(n)}}.dump() << '\n';
  }
}

}  // namespace egfasym
