#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etaq/rational.hpp"

namespace etaq {

/// prod_{delta | N} eta(delta z)^{r_delta} with integer exponents. The
/// exponent vector is stored densely, aligned with divisors(N).
class EtaQuotient {
 public:
  /// The trivial quotient (all exponents zero) at the given level.
  explicit EtaQuotient(std::int64_t level = 1);

  /// Sparse construction from (delta, r_delta) pairs; every delta must
  /// divide `level`. Repeated deltas accumulate.
  EtaQuotient(std::int64_t level, std::span<const std::pair<std::int64_t, std::int64_t>> entries);
  EtaQuotient(std::int64_t level, std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries);

  /// Dense construction; `exponents` is aligned with divisors(level).
  static EtaQuotient from_dense(std::int64_t level, std::vector<std::int64_t> exponents);

  std::int64_t level() const { return level_; }
  std::span<const std::int64_t> divisors() const { return divisors_; }
  std::span<const std::int64_t> exponents() const { return exponents_; }

  /// r_delta; zero when delta does not divide the level.
  std::int64_t exponent(std::int64_t delta) const;

  /// sum r_delta (= 2k).
  std::int64_t exponent_sum() const;
  /// sum delta * r_delta (24 times the order at infinity).
  std::int64_t weighted_sum() const;
  /// sum (N / delta) * r_delta.
  std::int64_t coweighted_sum() const;

  /// Same function, viewed at a multiple of the current level.
  EtaQuotient lift_to(std::int64_t level) const;
  EtaQuotient reciprocal() const;
  EtaQuotient pow(std::int64_t t) const;

  /// Exponent-wise sum; the level of the result is lcm of the two levels.
  friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);
  friend bool operator==(const EtaQuotient& a, const EtaQuotient& b) {
    return a.level_ == b.level_ && a.exponents_ == b.exponents_;
  }

  /// Comma-separated `delta:r` pairs, ascending delta, zero entries omitted.
  std::string to_string() const;

  /// Inverse of to_string. With level == 0 the level is the lcm of the
  /// deltas that appear (1 for the empty string).
  static EtaQuotient parse(std::string_view text, std::int64_t level = 0);

 private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  std::vector<std::int64_t> exponents_;
};

/// Eta "quotient" with rational exponents, aligned with divisors(level).
class GeneralizedEtaQuotient {
 public:
  GeneralizedEtaQuotient(std::int64_t level, std::vector<Rational> exponents);
  explicit GeneralizedEtaQuotient(const EtaQuotient& e);

  std::int64_t level() const { return level_; }
  std::span<const std::int64_t> divisors() const { return divisors_; }
  std::span<const Rational> exponents() const { return exponents_; }
  const Rational& exponent(std::int64_t delta) const;

  bool is_integral() const;
  /// Least t >= 1 with t * r integral for every exponent.
  mpz_class denominator_lcm() const;
  /// Throws Error(InvalidArgument) unless every exponent is an integer.
  EtaQuotient to_integral() const;

  std::string to_string() const;

  friend bool operator==(const GeneralizedEtaQuotient&, const GeneralizedEtaQuotient&) = default;

 private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  std::vector<Rational> exponents_;
};

/// Orders of vanishing v_d indexed by the divisors d of the level.
class CuspOrders {
 public:
  CuspOrders(std::int64_t level, std::vector<Rational> orders);

  std::int64_t level() const { return level_; }
  std::span<const std::int64_t> divisors() const { return divisors_; }
  std::span<const Rational> orders() const { return orders_; }
  const Rational& at(std::int64_t d) const;
  Rational sum() const;
  bool all_integral() const;

  friend bool operator==(const CuspOrders&, const CuspOrders&) = default;

 private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  std::vector<Rational> orders_;
};

/// n -> kronecker(discriminant_core, n), with chi(n) = 0 when n shares a
/// factor with the modulus.
class QuadChar {
 public:
  QuadChar(std::int64_t modulus, std::int64_t discriminant_core)
      : modulus_(modulus), core_(discriminant_core) {}

  std::int64_t modulus() const { return modulus_; }
  /// Square-free integer D with chi(n) = (D / n).
  std::int64_t discriminant_core() const { return core_; }
  bool is_trivial() const { return core_ == 1; }

  int operator()(std::int64_t n) const;

  friend bool operator==(const QuadChar&, const QuadChar&) = default;

 private:
  std::int64_t modulus_;
  std::int64_t core_;
};

enum class Classification { NotGHN, WeaklyHolomorphic, ModularForm, CuspForm };

std::string_view to_string(Classification c);

/// k = (sum r_delta) / 2, or nullopt for an odd exponent sum.
std::optional<std::int64_t> weight(const EtaQuotient& e);

/// Both Gordon-Hughes-Newman congruences:
///   sum delta r_delta = 0 (mod 24) and sum (N/delta) r_delta = 0 (mod 24).
/// Throws Error(OddWeight) when the exponent sum is odd.
bool ghn_check(const EtaQuotient& e);

/// chi(n) = ((-1)^k s / n), s = prod delta^{r_delta}, reduced modulo squares
/// so that negative exponents never leave the integers. Throws Error(NotGHN)
/// unless ghn_check(e) holds.
QuadChar character_of(const EtaQuotient& e);

/// Order of vanishing at the cusps c/d, (c, d) = 1:
///   N/24 * sum_delta gcd(d, delta)^2 r_delta / (gcd(d, N/d) d delta).
/// Throws Error(NotDivisor) if d does not divide the level.
Rational cusp_order(const EtaQuotient& e, std::int64_t d);
Rational cusp_order(const GeneralizedEtaQuotient& e, std::int64_t d);

CuspOrders cusp_orders(const EtaQuotient& e);
CuspOrders cusp_orders(const GeneralizedEtaQuotient& e);

Classification classify(const EtaQuotient& e);

/// The linear map r -> v for a square-free level, with its exact inverse.
/// forward()(d, delta) = N gcd(d, delta)^2 / (gcd(d, N/d) d delta), so that
/// 24 v = forward() * r.
class OrderSystem {
 public:
  /// Throws Error(NotSquareFree) for levels that are not square-free.
  explicit OrderSystem(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::span<const std::int64_t> divisors() const { return divisors_; }
  const RationalMatrix& forward() const { return forward_; }
  const RationalMatrix& inverse() const { return inverse_; }

  std::vector<Rational> orders(std::span<const Rational> exponents) const;
  std::vector<Rational> exponents(std::span<const Rational> orders) const;

 private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  RationalMatrix forward_;
  RationalMatrix inverse_;
};

/// The unique rational exponent vector whose cusp orders are v. Throws
/// Error(InconsistentWeight) when sum v_d != k sigma_1(N) / 12 and
/// Error(NotSquareFree) for non-square-free levels.
GeneralizedEtaQuotient exponents_from_orders(std::int64_t level, std::int64_t k, const CuspOrders& v);

}  // namespace etaq
