#include "etaq/dims.hpp"

#include <array>
#include <string>

#include "etaq/error.hpp"
#include "etaq/numthy.hpp"

namespace etaq {

std::string_view to_string(CharacterTag tag) {
  return tag == CharacterTag::Trivial ? "trivial" : "quadratic";
}

std::string_view to_string(DimensionSource source) {
  switch (source) {
    case DimensionSource::ClosedFormula: return "closed_formula";
    case DimensionSource::Table: return "table";
    case DimensionSource::BothAgree: return "both_agree";
  }
  return "unknown";
}

Rational gamma4(std::int64_t k) {
  if (floor_mod(k, 2) == 1) return 0;
  return floor_mod(k, 4) == 0 ? Rational(1) / 4 : Rational(-1) / 4;
}

Rational gamma3(std::int64_t k) {
  switch (floor_mod(k, 3)) {
    case 0: return Rational(1) / 3;
    case 2: return Rational(-1) / 3;
    default: return 0;
  }
}

Rational level1_difference(std::int64_t k) {
  return Rational(k - 1) / 12 - Rational(1) / 2 + gamma4(k) + gamma3(k);
}

DimensionReport dim_level1(std::int64_t k) {
  DimensionReport r;
  r.level = 1;
  r.weight = k;
  r.dim_eisenstein = 0;
  r.dim_total = 0;
  if (k < 0 || k % 2 != 0) return r;
  if (k == 0) {
    r.dim_eisenstein = 1;
    r.dim_total = 1;
    return r;
  }
  // dim M_{2-k} is 1 at k = 2 (constants) and 0 for k > 2.
  const Rational cusp = level1_difference(k) + (k == 2 ? 1 : 0);
  if (!cusp.is_integer() || cusp.sign() < 0)
    throw Error(ErrorCode::TableInconsistency, "level one formula gave " + cusp.to_string());
  r.dim_cusp = cusp.numerator().get_si();
  r.dim_eisenstein = k == 2 ? 0 : 1;
  r.dim_total = r.dim_cusp + *r.dim_eisenstein;
  return r;
}

namespace {

void require_large_prime(std::int64_t p) {
  if (p == 2 || p == 3) throw Error(ErrorCode::UnsupportedPrime, "p must be at least 5");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

std::int64_t exact_twelfth(std::int64_t numerator, const char* what) {
  if (numerator % 12 != 0 || numerator < 0)
    throw Error(ErrorCode::TableInconsistency,
                std::string(what) + " cell evaluates to " + Rational(numerator).to_string() + "/12" +
                    " = " + (Rational(numerator) / 12).to_string());
  return numerator / 12;
}

// dim S_k(Gamma0(p)) = ((p+1)(k-1) + offset) / 12; columns p = 1, 5, 7, 11 (mod 12).
constexpr std::array<std::array<int, 4>, 6> kGamma0Offsets{{
    {{2, -6, -4, -12}},     // k = 0
    {{-26, -18, -20, -12}}, // k = 2
    {{-6, -6, -12, -12}},   // k = 4
    {{-10, -18, -4, -12}},  // k = 6
    {{-14, -6, -20, -12}},  // k = 8
    {{-18, -18, -12, -12}}, // k = 10
}};

// dim S_k(p, (./p)) = ((k-1)(p+1) + offset) / 12 or zero (nullopt); columns
// p = 1, 5, 7, 11, 13, 17, 19, 23 (mod 24), rows k mod 12.
using Cell = std::optional<int>;
const std::array<std::array<Cell, 8>, 12> kQuadraticOffsets{{
    {{8, -12, {}, {}, -4, 0, {}, {}}},
    {{{}, {}, 0, -6, {}, {}, 0, -6}},
    {{-20, 0, {}, {}, -8, -12, {}, {}}},
    {{{}, {}, 2, -6, {}, {}, 2, -6}},
    {{0, -12, {}, {}, -12, 0, {}, {}}},
    {{{}, {}, -14, -6, {}, {}, -14, -6}},
    {{-4, 0, {}, {}, 8, -12, {}, {}}},
    {{{}, {}, 0, -6, {}, {}, 0, -6}},
    {{-4, -12, {}, {}, -20, 0, {}, {}}},
    {{{}, {}, 2, -6, {}, {}, 2, -6}},
    {{-12, 0, {}, {}, 0, -12, {}, {}}},
    {{{}, {}, -14, -6, {}, {}, -14, -6}},
}};

std::size_t gamma0_column(std::int64_t p) {
  switch (p % 12) {
    case 1: return 0;
    case 5: return 1;
    case 7: return 2;
    default: return 3;
  }
}

std::size_t quadratic_column(std::int64_t p) {
  switch (p % 24) {
    case 1: return 0;
    case 5: return 1;
    case 7: return 2;
    case 11: return 3;
    case 13: return 4;
    case 17: return 5;
    case 19: return 6;
    default: return 7;
  }
}

}  // namespace

std::int64_t mu02(std::int64_t p) { return p % 4 == 1 ? 2 : 0; }
std::int64_t mu03(std::int64_t p) { return p % 3 == 1 ? 2 : 0; }

std::int64_t g0(std::int64_t p) {
  const Rational g = Rational(p + 1) / 12 - Rational(mu02(p)) / 4 - Rational(mu03(p)) / 3;
  if (!g.is_integer()) throw Error(ErrorCode::TableInconsistency, "g0 is not integral");
  return g.numerator().get_si();
}

std::int64_t dim_cusp_gamma0_formula(std::int64_t p, std::int64_t k) {
  return (k - 1) * (g0(p) - 1) + (k - 2) + mu02(p) * (k / 4) + mu03(p) * (k / 3);
}

std::int64_t dim_cusp_gamma0_table(std::int64_t p, std::int64_t k) {
  const std::int64_t row = floor_mod(k, 12);
  if (row % 2 == 1) return 0;
  const int offset = kGamma0Offsets[static_cast<std::size_t>(row / 2)][gamma0_column(p)];
  return exact_twelfth((p + 1) * (k - 1) + offset, "Gamma0(p)");
}

DimensionReport dim_gamma0_p(std::int64_t p, std::int64_t k) {
  require_large_prime(p);
  if (k < 2 || k % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "weight must be even and at least 2");
  DimensionReport r;
  r.level = p;
  r.weight = k;
  if (k == 2) {
    r.dim_cusp = g0(p);
    r.dim_eisenstein = 1;
    r.source = DimensionSource::ClosedFormula;
  } else {
    const std::int64_t formula = dim_cusp_gamma0_formula(p, k);
    const std::int64_t table = dim_cusp_gamma0_table(p, k);
    if (formula != table)
      throw Error(ErrorCode::TableInconsistency,
                  "formula " + std::to_string(formula) + " != table " + std::to_string(table));
    r.dim_cusp = formula;
    r.dim_eisenstein = 2;
    r.source = DimensionSource::BothAgree;
  }
  r.dim_total = r.dim_cusp + *r.dim_eisenstein;
  return r;
}

std::int64_t character_sum_A4(std::int64_t p) {
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x)
    if ((x * x + 1) % p == 0) sum += kronecker(x, p);
  return sum;
}

std::int64_t character_sum_A3(std::int64_t p) {
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x)
    if ((x * x + x + 1) % p == 0) sum += kronecker(x, p);
  return sum;
}

std::int64_t root_count_A4(std::int64_t p) {
  std::int64_t n = 0;
  for (std::int64_t x = 0; x < p; ++x) n += (x * x + 1) % p == 0;
  return n;
}

std::int64_t root_count_A3(std::int64_t p) {
  std::int64_t n = 0;
  for (std::int64_t x = 0; x < p; ++x) n += (x * x + x + 1) % p == 0;
  return n;
}

DimensionReport dim_quadratic(std::int64_t p, std::int64_t k) {
  require_large_prime(p);
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "weight must be at least 2");
  DimensionReport r;
  r.level = p;
  r.weight = k;
  r.character = CharacterTag::Quadratic;
  r.source = DimensionSource::Table;
  const Cell cell = kQuadraticOffsets[static_cast<std::size_t>(floor_mod(k, 12))][quadratic_column(p)];
  r.dim_cusp = cell ? exact_twelfth((k - 1) * (p + 1) + *cell, "quadratic character") : 0;
  return r;
}

}  // namespace etaq
