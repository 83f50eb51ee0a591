#include <random>

#include "doctest.h"
#include "egfasym/error.hpp"
#include "egfasym/params.hpp"

using namespace egfasym;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate accepts the worked examples") {
  const EgfParams a143405 = validate(1, 2, 1, -1, 0);
  CHECK(a143405.r() == -1);
  const EgfParams a002874 = validate(mpq_class(1, 3), 3, 1, 1, mpq_class(-4, 3));
  CHECK(a002874.prefactor_exponent() == 0);
  CHECK_FALSE(a002874.outside_worked_examples());
}

TEST_CASE("validate names the violated constraint") {
  CHECK(kind_of([] { validate(1, 1, 1, 1, 0); }) == ErrorKind::OrderViolation);
  CHECK(kind_of([] { validate(1, 3, mpq_class(1, 2), 1, 0); }) == ErrorKind::OrderViolation);
  CHECK(kind_of([] { validate(0, 2, 1, 1, 0); }) == ErrorKind::NonPositiveM);
  CHECK(kind_of([] { validate(-1, 2, 1, 1, 0); }) == ErrorKind::NonPositiveM);
  CHECK(kind_of([] { validate(1, 2, 1, 0, 0); }) == ErrorKind::ZeroR);
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(validate(1, 2, 1, -1, 0)) == Regime::Boundary);
  CHECK(classify_regime(validate(1, 3, 1, 1, 0)) == Regime::Super);
  CHECK(classify_regime(validate(1, 3, 2, 1, 0)) == Regime::FullOnly);
  // 2 + 1/10^30 is Super even though it rounds to 2 in double
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(classify_regime(validate(1, mpq_class(2) + mpq_class(1, big), 1, 1, 0)) == Regime::Super);
}

TEST_CASE("regime is invariant under common scaling of b and d; validate is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 40), den(1, 9);
  for (int i = 0; i < 300; ++i) {
    mpq_class d(num(rng) + den(rng), den(rng));
    d.canonicalize();
    if (d < 1) d += 1;
    mpq_class b = d * mpq_class(num(rng) + 10, 10);  // ratio in (1, 5]
    b.canonicalize();
    const mpq_class scale(num(rng) + 9, den(rng));
    mpq_class bs = b * scale, ds = d * scale;
    bs.canonicalize();
    ds.canonicalize();
    if (ds < 1) continue;
    const EgfParams p = validate(1, b, d, 1, 0);
    const EgfParams q = validate(1, bs, ds, 1, 0);
    CHECK(classify_regime(p) == classify_regime(q));
    CHECK(validate(p.m(), p.b(), p.d(), p.r(), p.s()) == p);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-1.5") == mpq_class(-3, 2));
  CHECK(parse_rational("1/3") == mpq_class(1, 3));
  CHECK(parse_rational("-4/6") == mpq_class(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("+0.125") == mpq_class(1, 8));
  CHECK(parse_rational("-.5") == mpq_class(-1, 2));
  for (const char* bad : {"", "abc", "1/0", "1e5", "1.", "1/-2", "0x10", "1.2.3", "--1"}) {
    CHECK_MESSAGE(kind_of([&] { parse_rational(bad); }) == ErrorKind::InvalidNumber, bad);
  }
}

TEST_CASE("built-in family table") {
  REQUIRE(find_family("A002872"));
  CHECK(find_family("A002872")->params.m() == mpq_class(1, 2));
  CHECK(find_family("A002872")->params.s() == mpq_class(-3, 2));
  CHECK_FALSE(find_family("A000001"));
  for (const auto& f : known_families()) CHECK(f.params.prefactor_exponent() == 0);
  CHECK(validate(1, mpq_class(5, 2), 1, 1, 0).outside_worked_examples());
}
