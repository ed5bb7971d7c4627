#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/rational.hpp"

namespace etaq {

/// Parameters of the prime-level lattice walk on v_1 + v_p = L.
struct PrimeLevelParams {
  std::int64_t p = 0;
  std::int64_t k = 0;
  /// Smallest divisor of k required for quotients to exist.
  std::int64_t h = 1;
  /// Spacing of admissible v_1 values; p - 1 = 2 h d.
  std::int64_t d = 1;
  /// Least nonnegative residue of the admissible v_1 class modulo d.
  std::int64_t c = 0;
  /// k (p + 1) / 12.
  std::int64_t L = 0;

  friend bool operator==(const PrimeLevelParams&, const PrimeLevelParams&) = default;
};

struct EnumerationReport {
  std::int64_t level = 1;
  std::int64_t weight = 0;
  bool admissible = false;
  std::optional<PrimeLevelParams> params;
  /// k sigma_1(N) / 12, the total order of vanishing.
  Rational total_order;
  std::vector<EtaQuotient> cusp;
  std::vector<EtaQuotient> noncusp;
  /// Closed-form cusp count (prime levels only).
  std::optional<std::int64_t> formula_count;
  /// Cusp count from the independent exponent-box scan.
  std::optional<std::int64_t> oracle_count;
  /// Quotients found by exactly one of the two scans.
  std::vector<EtaQuotient> scan_disagreements;

  std::int64_t cusp_count() const { return static_cast<std::int64_t>(cusp.size()); }
  std::int64_t noncusp_count() const { return static_cast<std::int64_t>(noncusp.size()); }
};

/// Minimal h that must divide k at prime level p, by the residue of p mod 24;
/// returns h when h | k and nullopt otherwise.
std::optional<std::int64_t> weight_condition(std::int64_t p, std::int64_t k);
/// The divisor h for p alone, regardless of k.
std::int64_t required_divisor(std::int64_t p);

/// Throws Error(Inadmissible) when weight_condition(p, k) is empty and
/// Error(InvalidArgument) for p < 5 or k < 1.
PrimeLevelParams prime_params(std::int64_t p, std::int64_t k);

/// Closed-form number of cusp eta-quotients in S_k(Gamma1(p)): the number of
/// v in [1, L-1] congruent to c mod d. Cross-checked against the three-case
/// expression; a mismatch throws std::logic_error.
std::int64_t count_cusp_eta(std::int64_t p, std::int64_t k);
std::int64_t count_cusp_eta_unified(const PrimeLevelParams& params);
/// L/d - 1 when c = L mod d, ceil(L/d) when c < L mod d, floor(L/d) otherwise.
std::int64_t count_cusp_eta_three_case(const PrimeLevelParams& params);

/// Walks v_1 = c, c + d, ... inside (0, L) and converts each point to its
/// (integral) exponents. Ordered by increasing v_1.
std::vector<EtaQuotient> list_cusp_eta(std::int64_t p, std::int64_t k);

/// The two non-cusp quotients when (p - 1)/2 divides k, else empty.
std::vector<EtaQuotient> noncusp_eta(std::int64_t p, std::int64_t k);

/// Full prime-level report; the oracle count comes from the exponent-box scan.
EnumerationReport enumerate_prime(std::int64_t p, std::int64_t k);

/// gcd(gcd_{delta | N, delta != N} (N/delta - 1), 24) divides 2k.
bool squarefree_weight_condition(std::int64_t level, std::int64_t k);

struct ScanResult {
  std::vector<EtaQuotient> quotients;
  std::int64_t candidates = 0;
};

/// Nonnegative integer order vectors on the hyperplane sum v_d = k sigma_1 / 12
/// whose exponents are integral and satisfy GHN.
ScanResult scan_orders(std::int64_t level, std::int64_t k);
/// Integer exponent vectors in the bounding box of the preimage of the order
/// simplex with sum r = 2k, GHN, and every order nonnegative.
ScanResult scan_exponent_box(std::int64_t level, std::int64_t k);

/// Square-free level enumeration with both scans. Throws Error(NotSquareFree).
EnumerationReport enumerate_squarefree(std::int64_t level, std::int64_t k);

/// Number of nonnegative integer points on v_1 + ... = total (n coordinates).
mpz_class hyperplane_point_count(std::int64_t coordinates, std::int64_t total);

/// Points (v_1, v_p, v_q, v_pq) on the pq hyperplane that pass the six
/// congruence filters implied by integral exponents.
std::int64_t pq_upper_bound(std::int64_t p, std::int64_t q, std::int64_t k);

/// Canonical ordering: by order at infinity, then by the order vector.
void sort_canonical(std::vector<EtaQuotient>& quotients);

}  // namespace etaq
