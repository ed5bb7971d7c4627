#include <random>

#include "doctest.h"
#include "etaq/error.hpp"
#include "etaq/eta_quotient.hpp"
#include "etaq/numthy.hpp"
#include "generators.hpp"

using namespace etaq;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

const EtaQuotient kDelta(1, {{1, 24}});
const EtaQuotient kLevel11(11, {{1, 2}, {11, 2}});
const EtaQuotient kEta5(5, {{1, -1}, {5, 5}});

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(kDelta) == 12);
  CHECK(weight(kLevel11) == 2);
  CHECK_FALSE(weight(EtaQuotient(1, {{1, 1}})).has_value());
}

TEST_CASE("ghn_check") {
  CHECK(ghn_check(kDelta));
  CHECK(ghn_check(kLevel11));
  CHECK_FALSE(ghn_check(EtaQuotient(2, {{1, 1}, {2, 1}})));
  CHECK_THROWS_WITH_AS(ghn_check(EtaQuotient(1, {{1, 1}})), doctest::Contains("OddWeight"), Error);
}

TEST_CASE("character_of") {
  // m = 2k/(p-1) = 1 is odd, so the character is (5/n), not trivial.
  const QuadChar odd_m = character_of(kEta5);
  CHECK(odd_m.discriminant_core() == 5);
  CHECK_FALSE(odd_m.is_trivial());
  for (std::int64_t n = 1; n < 40; ++n)
    CHECK(odd_m(n) == (n % 5 == 0 ? 0 : kronecker(n, 5)));

  // m = 2: s = 5^10, a perfect square
  CHECK(character_of(EtaQuotient(5, {{1, -2}, {5, 10}})).is_trivial());

  for (std::int64_t k = 0; k <= 10; ++k) {
    const QuadChar chi = character_of(EtaQuotient(8, {{4, -2 * k}, {8, 4 * k}}));
    CHECK(chi.discriminant_core() == (k % 2 == 0 ? 1 : -1));
    for (std::int64_t n = 1; n < 50; ++n)
      CHECK(chi(n) == (n % 2 == 0 ? 0 : kronecker(k % 2 == 0 ? 1 : -1, n)));
  }

  CHECK(character_of(kDelta).is_trivial());
  CHECK_THROWS_WITH_AS(character_of(EtaQuotient(2, {{1, 1}, {2, 1}})), doctest::Contains("NotGHN"), Error);
  CHECK_THROWS_WITH_AS(character_of(EtaQuotient(1, {{1, 1}})), doctest::Contains("NotGHN"), Error);
}

TEST_CASE("character vanishes exactly on non-units") {
  std::mt19937_64 rng(5);
  for (std::int64_t level : {5, 6, 8, 11, 15, 20, 35}) {
    for (int i = 0; i < 20; ++i) {
      const QuadChar chi = character_of(gen::random_ghn_quotient(rng, level, 12));
      CHECK(chi(1) == 1);
      for (std::int64_t n = 1; n < 3 * level; ++n) CHECK((chi(n) == 0) == (std::gcd(n, level) > 1));
    }
  }
}

TEST_CASE("cusp_order") {
  CHECK(cusp_order(kLevel11, 1) == 1);
  CHECK(cusp_order(kLevel11, 11) == 1);
  CHECK(cusp_order(kEta5, 1) == 0);
  CHECK(cusp_order(kEta5, 5) == 1);
  for (std::int64_t d : divisors(30)) CHECK(cusp_order(EtaQuotient(30), d) == 0);
  CHECK_THROWS_WITH_AS(cusp_order(kLevel11, 3), doctest::Contains("NotDivisor"), Error);
}

TEST_CASE("cusp_order at prime level matches (p r1 + rp)/24 and (r1 + p rp)/24") {
  std::mt19937_64 rng(17);
  for (std::int64_t p : {5, 7, 11, 13, 23}) {
    for (int i = 0; i < 50; ++i) {
      const auto e = gen::random_quotient(rng, p, 30);
      const std::int64_t r1 = e.exponent(1), rp = e.exponent(p);
      CHECK(cusp_order(e, 1) == q(p * r1 + rp, 24));
      CHECK(cusp_order(e, p) == q(r1 + p * rp, 24));
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(kDelta) == Classification::CuspForm);
  CHECK(classify(kEta5) == Classification::ModularForm);
  CHECK(classify(kLevel11.reciprocal()) == Classification::WeaklyHolomorphic);
  CHECK(classify(EtaQuotient(2, {{1, 1}, {2, 1}})) == Classification::NotGHN);
  CHECK(classify(EtaQuotient(1, {{1, 1}})) == Classification::NotGHN);

  // Exhaustive small box at level 5: every GHN quotient with a negative
  // order is weakly holomorphic, and the rest split by zero orders.
  int weak = 0;
  for (std::int64_t r1 = -12; r1 <= 12; ++r1)
    for (std::int64_t r5 = -12; r5 <= 12; ++r5) {
      const EtaQuotient e(5, {{1, r1}, {5, r5}});
      if ((r1 + r5) % 2 != 0 || !ghn_check(e)) continue;
      const std::int64_t a = 5 * r1 + r5, b = r1 + 5 * r5;
      const Classification expected = (a < 0 || b < 0)    ? Classification::WeaklyHolomorphic
                                      : (a == 0 || b == 0) ? Classification::ModularForm
                                                           : Classification::CuspForm;
      CHECK(classify(e) == expected);
      weak += expected == Classification::WeaklyHolomorphic;
    }
  CHECK(weak > 0);
}

TEST_CASE("reciprocal of a cusp form is weakly holomorphic") {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (std::int64_t level : {5, 6, 11, 15, 35}) {
    for (int i = 0; i < 400; ++i) {
      const auto e = gen::random_ghn_quotient(rng, level, 12);
      if (classify(e) != Classification::CuspForm) continue;
      ++seen;
      CHECK(classify(e.reciprocal()) == Classification::WeaklyHolomorphic);
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("order sum is k sigma_1(N) / 12") {
  std::mt19937_64 rng(1234);
  for (std::int64_t level : {5, 6, 11, 15, 35}) {
    for (int i = 0; i < 100; ++i) {
      auto e = gen::random_quotient(rng, level, 20);
      if (e.exponent_sum() % 2 != 0) continue;
      const std::int64_t k = *weight(e);
      CHECK(cusp_orders(e).sum() == q(k * sigma1(level), 12));
    }
  }
}

TEST_CASE("prime-level GHN quotients have integral orders") {
  std::mt19937_64 rng(77);
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (int i = 0; i < 30; ++i) {
      const auto e = gen::random_ghn_quotient(rng, p, 40);
      CHECK(cusp_orders(e).all_integral());
    }
  }
}

TEST_CASE("exponents_from_orders") {
  CHECK(exponents_from_orders(11, 2, CuspOrders(11, {1, 1})) ==
        GeneralizedEtaQuotient(11, {2, 2}));
  // v_1 = 5 at the cusp 0 and v_11 = 1 at infinity
  CHECK(exponents_from_orders(11, 6, CuspOrders(11, {5, 1})) ==
        GeneralizedEtaQuotient(11, {q(54, 5), q(6, 5)}));
  CHECK(exponents_from_orders(11, 6, CuspOrders(11, {1, 5})) ==
        GeneralizedEtaQuotient(11, {q(6, 5), q(54, 5)}));

  const GeneralizedEtaQuotient all_ones = exponents_from_orders(15, 2, CuspOrders(15, {1, 1, 1, 1}));
  CHECK(all_ones == GeneralizedEtaQuotient(15, {1, 1, 1, 1}));
  CHECK(cusp_orders(EtaQuotient(15, {{1, 1}, {3, 1}, {5, 1}, {15, 1}})) == CuspOrders(15, {1, 1, 1, 1}));

  CHECK_THROWS_WITH_AS(exponents_from_orders(11, 2, CuspOrders(11, {1, 2})),
                       doctest::Contains("InconsistentWeight"), Error);
  CHECK_THROWS_WITH_AS(exponents_from_orders(20, 2, CuspOrders(20, {0, 0, 0, 0, 0, 0})),
                       doctest::Contains("NotSquareFree"), Error);
}

TEST_CASE("orders and exponents round trip") {
  std::mt19937_64 rng(4321);
  for (std::int64_t level : {2, 5, 6, 11, 15, 30, 35, 77}) {
    const OrderSystem system(level);
    CHECK(system.forward() * system.inverse() == RationalMatrix::identity(system.divisors().size()));
    for (int i = 0; i < 25; ++i) {
      const auto e = gen::random_ghn_quotient(rng, level, 15);
      const std::int64_t k = *weight(e);
      const GeneralizedEtaQuotient back = exponents_from_orders(level, k, cusp_orders(e));
      CHECK(back == GeneralizedEtaQuotient(e));
      CHECK(back.to_integral() == e);
    }
  }
}

TEST_CASE("text format") {
  CHECK(kEta5.to_string() == "1:-1,5:5");
  CHECK(EtaQuotient::parse("1:-1,5:5") == kEta5);
  CHECK(EtaQuotient::parse("1:-1, 5:5", 5) == kEta5);
  CHECK(EtaQuotient::parse("").level() == 1);
  CHECK(EtaQuotient::parse("", 7) == EtaQuotient(7));
  CHECK(EtaQuotient::parse("4:-2,8:4").level() == 8);
  CHECK(EtaQuotient::parse("1:2,11:2", 11) == kLevel11);
  CHECK(EtaQuotient::parse("1:2", 11).to_string() == "1:2");
  CHECK_THROWS_WITH_AS(EtaQuotient::parse("1:2,3:1", 11), doctest::Contains("NotDivisor"), Error);
  CHECK_THROWS_WITH_AS(EtaQuotient::parse("5:1,1:2"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(EtaQuotient::parse("1:x"), Error);
  CHECK_THROWS_AS(EtaQuotient::parse("1-2"), Error);
  CHECK_THROWS_AS(EtaQuotient::parse("1:2,"), Error);
}

TEST_CASE("text format round trips") {
  std::mt19937_64 rng(8);
  for (std::int64_t level : {1, 4, 11, 12, 30, 60}) {
    for (int i = 0; i < 50; ++i) {
      const auto e = gen::random_quotient(rng, level, 3);
      const std::string s = e.to_string();
      CHECK(EtaQuotient::parse(s, level) == e);
      CHECK(EtaQuotient::parse(s, level).to_string() == s);
    }
  }
}

TEST_CASE("products add exponents") {
  const EtaQuotient a(4, {{1, 2}, {4, -1}});
  const EtaQuotient b(6, {{2, 3}, {6, 1}});
  const EtaQuotient c = a * b;
  CHECK(c.level() == 12);
  CHECK(c.to_string() == "1:2,2:3,4:-1,6:1");
  CHECK(kLevel11.pow(3).to_string() == "1:6,11:6");
}
