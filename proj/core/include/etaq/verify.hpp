#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/rational.hpp"

namespace etaq {

struct IndependenceCertificate {
  std::int64_t level = 1;
  std::int64_t weight = 0;
  std::int64_t quotient_count = 0;
  /// Column range [first_exponent, first_exponent + cols) of the q-expansions.
  std::int64_t first_exponent = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t rank = 0;
  bool independent = false;
  /// Leading exponents pairwise distinct (the echelon shape).
  bool distinct_leading_exponents = false;
};

/// Rank of the coefficient matrix of the given quotients over the columns
/// [min leading exponent, sturm_bound(level, k)). Every quotient must have
/// weight k (Error(WeightMismatch)) and a level dividing `level`.
IndependenceCertificate independence_rank(const std::vector<EtaQuotient>& quotients, std::int64_t k,
                                          std::int64_t level);

enum class RatioCase {
  /// p = 3 (mod 4), odd k: compared against dim S_k(p, (./p)).
  QuadraticOddWeight,
  /// p = 3 (mod 4), even k: compared against dim S_k(Gamma0(p)).
  TrivialEvenWeight,
  /// p = 1 (mod 4): compared against the sum of both spaces.
  Combined,
};

std::string_view to_string(RatioCase c);

struct SpanRatio {
  std::int64_t p = 0;
  std::int64_t k = 0;
  RatioCase ratio_case = RatioCase::TrivialEvenWeight;
  std::int64_t cusp_count = 0;
  std::int64_t noncusp_count = 0;
  std::int64_t dimension = 0;
  Rational ratio;
  /// 2h/(p-1) for p = 3 (mod 4) and h/(p-1) for p = 1 (mod 4).
  Rational limit;
};

/// The limiting value of the span ratio for prime p.
Rational span_ratio_limit(std::int64_t p);

/// (number of cusp eta-quotients) / (dimension of the matching cusp space).
/// Throws Error(Inadmissible), Error(ZeroDimension) and propagates
/// Error(TableInconsistency) from the quadratic-character table.
SpanRatio span_ratio(std::int64_t p, std::int64_t k);

struct LiftCertificate {
  GeneralizedEtaQuotient root;
  /// Smallest t with t * r integral.
  std::int64_t power = 1;
  EtaQuotient lifted;
  std::int64_t lifted_weight = 0;
  bool ghn = false;
  Classification classification = Classification::NotGHN;
  CuspOrders lifted_orders;
};

/// Solves for the rational exponents of an order vector at prime level p
/// and raises the result to the least power that clears denominators.
/// Throws Error(AlreadyIntegral) when the exponents are already integers.
LiftCertificate fractional_power_lift(std::int64_t p, std::int64_t k, const CuspOrders& v);

/// Order vector at prime level p from the order at infinity (v_p), with
/// v_1 = k (p + 1) / 12 - v_inf.
CuspOrders prime_orders_from_infinity(std::int64_t p, std::int64_t k, std::int64_t v_inf);

/// eta^{4k}(4pz) / eta^{2k}(2pz) at level 4p; for p = 2 this is eta^{4k}(8z) / eta^{2k}(4z).
EtaQuotient family_4p_quotient(std::int64_t p, std::int64_t k);

/// GHN, nonnegative orders at every d | N and the expected character:
/// ((-1)^k / n) for the level-8 family, trivial for level 4p. Throws
/// Error(OddWeight) for odd k when p > 2.
bool verify_4p_family(std::int64_t p, std::int64_t k);

struct SweepRow {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t count_cusp = 0;
  std::int64_t count_noncusp = 0;
  std::optional<std::int64_t> dim_cusp;
  std::optional<Rational> ratio;
  std::int64_t rank = 0;
  bool independent = false;
  std::vector<std::string> diagnostics;
};

/// One row per prime 5 <= p <= pmax and admissible 1 <= k <= kmax. Rows are
/// computed on up to `threads` workers and returned in (p, k) order.
std::vector<SweepRow> sweep(std::int64_t pmax, std::int64_t kmax, unsigned threads = 1);
SweepRow sweep_cell(std::int64_t p, std::int64_t k);

}  // namespace etaq
