#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "etaq/rational.hpp"

namespace etaq {

enum class CharacterTag { Trivial, Quadratic };
enum class DimensionSource { ClosedFormula, Table, BothAgree };

std::string_view to_string(CharacterTag tag);
std::string_view to_string(DimensionSource source);

struct DimensionReport {
  std::int64_t level = 1;
  std::int64_t weight = 0;
  CharacterTag character = CharacterTag::Trivial;
  std::int64_t dim_cusp = 0;
  std::optional<std::int64_t> dim_eisenstein;
  std::optional<std::int64_t> dim_total;
  DimensionSource source = DimensionSource::ClosedFormula;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// gamma_4(k) and gamma_3(k) of the level-one formula.
Rational gamma4(std::int64_t k);
Rational gamma3(std::int64_t k);

/// dim S_k - dim M_{2-k} for SL2(Z) = (k-1)/12 - 1/2 + gamma4(k) + gamma3(k).
Rational level1_difference(std::int64_t k);

/// Level one dimensions. Odd and negative weights give zero spaces.
DimensionReport dim_level1(std::int64_t k);

/// Number of roots of x^2 + 1 and x^2 + x + 1 modulo p (p >= 5 prime).
std::int64_t mu02(std::int64_t p);
std::int64_t mu03(std::int64_t p);
/// (p+1)/12 - mu02/4 - mu03/3, always an integer for p >= 5.
std::int64_t g0(std::int64_t p);

/// Closed formula for dim S_k(Gamma0(p)), even k >= 2.
std::int64_t dim_cusp_gamma0_formula(std::int64_t p, std::int64_t k);
/// Tabulated dim S_k(Gamma0(p)) keyed by (k mod 12, p mod 12), k > 2.
/// Throws Error(TableInconsistency) if the cell is not a nonnegative integer.
std::int64_t dim_cusp_gamma0_table(std::int64_t p, std::int64_t k);

/// Gamma0(p) with trivial character, p >= 5 prime and even k >= 2. For k >= 4
/// the formula and the table are both evaluated and must agree. Throws
/// Error(UnsupportedPrime) for p in {2, 3}.
DimensionReport dim_gamma0_p(std::int64_t p, std::int64_t k);

/// sum over x mod p with x^2 = -1 of (x / p), by enumeration.
std::int64_t character_sum_A4(std::int64_t p);
/// sum over x mod p with x^2 + x + 1 = 0 of (x / p), by enumeration.
std::int64_t character_sum_A3(std::int64_t p);
std::int64_t root_count_A4(std::int64_t p);
std::int64_t root_count_A3(std::int64_t p);

/// dim S_k(p, (./p)) from the table keyed by (k mod 12, p mod 24). Cells
/// that are non-integral or negative raise Error(TableInconsistency).
DimensionReport dim_quadratic(std::int64_t p, std::int64_t k);

}  // namespace etaq
