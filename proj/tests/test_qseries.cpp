#include <random>

#include "doctest.h"
#include "etaq/error.hpp"
#include "etaq/numthy.hpp"
#include "etaq/qseries.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace etaq;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<mpz_class> to_vector(std::span<const mpz_class> s) { return {s.begin(), s.end()}; }

/// Full expansion from the naive oracle, as coefficients of q^0 .. q^{precision-1}.
std::vector<mpz_class> naive_expansion(const EtaQuotient& e, std::int64_t precision) {
  const std::int64_t n0 = e.weighted_sum() / 24;
  const std::size_t len = static_cast<std::size_t>(std::max<std::int64_t>(precision - n0, 0));
  std::vector<mpz_class> c(len);
  if (len == 0) return c;
  c[0] = 1;
  const auto divs = e.divisors();
  const auto exps = e.exponents();
  for (std::size_t i = 0; i < divs.size(); ++i)
    if (exps[i] != 0) c = oracle::convolve(c, oracle::eta_product_naive(divs[i], exps[i], len), len);
  return c;
}

}  // namespace

TEST_CASE("eta_power documented values") {
  CHECK(eta_power(1, 0, 10) == QSeries::one(10));
  CHECK(to_vector(eta_power(1, 1, 16).coefficients()) ==
        ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
  CHECK(to_vector(eta_power(1, -1, 12).coefficients()) == oracle::partitions(12));
  CHECK(to_vector(eta_power(3, 1, 10).coefficients()) == ints({1, 0, 0, -1, 0, 0, -1, 0, 0, 0}));
}

TEST_CASE("q_expansion documented values") {
  const QSeries delta = q_expansion(EtaQuotient(1, {{1, 24}}), 6);
  CHECK(delta.leading_exponent() == 1);
  CHECK(to_vector(delta.coefficients()) == ints({1, -24, 252, -1472, 4830}));

  const QSeries f = q_expansion(EtaQuotient(11, {{1, 2}, {11, 2}}), 12);
  CHECK(f.leading_exponent() == 1);
  CHECK(to_vector(f.coefficients()) == ints({1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1}));

  CHECK(q_expansion(EtaQuotient(7), 5) == QSeries::one(5));
  CHECK_THROWS_WITH_AS(q_expansion(EtaQuotient(1, {{1, 1}}), 5), doctest::Contains("FractionalLeadingPower"),
                       Error);
}

TEST_CASE("tau(n) against the naive product") {
  const QSeries delta = q_expansion(EtaQuotient(1, {{1, 24}}), 60);
  CHECK(to_vector(delta.coefficients()) == oracle::eta_product_naive(1, 24, 59));
  // tau(mn) = tau(m) tau(n) for coprime m, n
  for (auto [m, n] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 11}, {2, 29}})
    CHECK(delta.coefficient(m * n) == delta.coefficient(m) * delta.coefficient(n));
}

TEST_CASE("sparse, dense and naive expansions agree") {
  for (std::int64_t delta : {1, 2, 3, 7}) {
    for (std::int64_t r : {-25, -7, -1, 1, 2, 5, 24, 31}) {
      const auto naive = oracle::eta_product_naive(delta, r, 80);
      CHECK(to_vector(eta_power(delta, r, 80, ExpansionMethod::Sparse).coefficients()) == naive);
      CHECK(to_vector(eta_power(delta, r, 80, ExpansionMethod::Dense).coefficients()) == naive);
    }
  }
  CHECK(series::euler_product_dense(1, 200) == series::euler_product_pentagonal(1, 200));
  CHECK(series::euler_product_dense(5, 200) == series::euler_product_pentagonal(5, 200));
}

TEST_CASE("random quotients: both methods match the oracle") {
  std::mt19937_64 rng(99);
  for (std::int64_t level : {5, 6, 11, 15, 20}) {
    for (int i = 0; i < 8; ++i) {
      const auto e = gen::random_ghn_quotient(rng, level, 10);
      const std::int64_t prec = e.weighted_sum() / 24 + 40;
      const QSeries sparse = q_expansion(e, prec, ExpansionMethod::Sparse);
      const QSeries dense = q_expansion(e, prec, ExpansionMethod::Dense);
      CHECK(sparse == dense);
      const auto expected = naive_expansion(e, prec);
      for (std::int64_t n = e.weighted_sum() / 24; n < prec; ++n)
        CHECK(sparse.coefficient(n) == expected[static_cast<std::size_t>(n - e.weighted_sum() / 24)]);
    }
  }
}

TEST_CASE("partition numbers") {
  const auto p = to_vector(eta_power(1, -1, 200).coefficients());
  CHECK(p == oracle::partitions(200));
  CHECK(p[100] == mpz_class("190569292"));
  CHECK(p[199] == mpz_class("3646072432125"));
}

TEST_CASE("eta times the partition series is 1") {
  const QSeries prod = eta_power(1, 1, 50) * eta_power(1, -1, 50);
  CHECK(prod == QSeries::one(50));
  for (std::int64_t delta : {1, 2, 5}) {
    for (std::int64_t r : {1, 3, 8, 24}) {
      CHECK(eta_power(delta, r, 64) * eta_power(delta, -r, 64) == QSeries::one(64));
    }
  }
}

TEST_CASE("expansions respect products") {
  std::mt19937_64 rng(2024);
  for (std::int64_t level : {5, 8, 12, 15}) {
    for (int i = 0; i < 10; ++i) {
      const auto a = gen::random_ghn_quotient(rng, level, 8);
      const auto b = gen::random_ghn_quotient(rng, level, 8);
      const std::int64_t prec = std::max(a.weighted_sum(), b.weighted_sum()) / 24 + 30;
      const QSeries lhs = q_expansion(a * b, prec);
      const QSeries rhs = q_expansion(a, prec) * q_expansion(b, prec);
      CHECK(lhs.truncate(rhs.precision()) == rhs.truncate(lhs.precision()));
    }
  }
}

TEST_CASE("leading exponent is the order at infinity") {
  std::mt19937_64 rng(31337);
  for (std::int64_t level : {5, 8, 11, 15, 20, 35}) {
    for (int i = 0; i < 25; ++i) {
      const auto e = gen::random_ghn_quotient(rng, level, 12);
      const QSeries s = q_expansion(e, e.weighted_sum() / 24 + 5);
      CHECK(Rational(s.leading_exponent()) == cusp_order(e, level));
      CHECK(s.coefficient(s.leading_exponent()) == 1);
    }
  }
}

TEST_CASE("QSeries basics") {
  const QSeries s(2, ints({0, 0, 3, -1}));
  CHECK(s.leading_exponent() == 4);
  CHECK(s.precision() == 6);
  CHECK(s.coefficient(0) == 0);
  CHECK(s.coefficient(4) == 3);
  CHECK_THROWS_AS(s.coefficient(6), Error);
  CHECK(s.truncate(5).precision() == 5);

  const QSeries zero(3, ints({0, 0}));
  CHECK(zero.is_zero());
  CHECK(zero.precision() == 5);

  const QSeries a(1, ints({1, 2, 3}));  // precision 4
  const QSeries b(0, ints({1, 1}));     // precision 2
  CHECK((a * b).precision() == 3);
  CHECK((a * b) == QSeries(1, ints({1, 3})));
}

TEST_CASE("QSeries text format") {
  const QSeries delta = q_expansion(EtaQuotient(1, {{1, 24}}), 6);
  CHECK(delta.to_string() == "q^{1} * (1 - 24*q + 252*q^2 - 1472*q^3 + 4830*q^4)");
  CHECK(QSeries::parse(delta.to_string()) == delta);
  CHECK(QSeries::one(3).to_string() == "q^{0} * (1 + 0*q + 0*q^2)");

  std::mt19937_64 rng(6);
  for (std::int64_t level : {5, 11, 15}) {
    for (int i = 0; i < 10; ++i) {
      const auto e = gen::random_ghn_quotient(rng, level, 10);
      const QSeries s = q_expansion(e, e.weighted_sum() / 24 + 12);
      CHECK(QSeries::parse(s.to_string()) == s);
      CHECK(QSeries::parse(s.to_string()).to_string() == s.to_string());
    }
  }
  CHECK_THROWS_AS(QSeries::parse("1 + q"), Error);
}

TEST_CASE("sturm_bound") {
  CHECK(sturm_bound(11, 2) == 3);
  CHECK(sturm_bound(1, 12) == 2);
  CHECK(sturm_bound(15, 2) == 5);
  for (std::int64_t p : oracle::primes_between(5, 60))
    for (std::int64_t k = 1; k <= 30; ++k) {
      CHECK(sturm_bound(p, k) == k * (p + 1) / 12 + 1);
      CHECK(sturm_bound(p, k) >= p * k / 12 + 1);
    }
}
