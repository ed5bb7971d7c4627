#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/eta_quotient.hpp"

namespace etaq {

/// Truncated Laurent series q^{n0} * (c_0 + c_1 q + ... + c_{len-1} q^{len-1}),
/// exact for every exponent below precision() = n0 + len.
class QSeries {
 public:
  QSeries() = default;

  /// Leading zero coefficients are absorbed into the leading exponent, so
  /// coefficients().front() != 0 unless the series is zero to precision.
  QSeries(std::int64_t leading_exponent, std::vector<mpz_class> coefficients);

  static QSeries one(std::int64_t precision);

  std::int64_t leading_exponent() const { return n0_; }
  std::int64_t precision() const { return n0_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::span<const mpz_class> coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Coefficient of q^n; zero below the leading exponent. Throws
  /// Error(InvalidArgument) at or beyond the precision.
  mpz_class coefficient(std::int64_t n) const;

  /// Same series known only below `precision`.
  QSeries truncate(std::int64_t precision) const;

  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// `q^{n0} * (c0 + c1*q + c2*q^2 + ...)`, every coefficient printed.
  std::string to_string() const;
  static QSeries parse(std::string_view text);

 private:
  std::int64_t n0_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Dense power series helpers on coefficient vectors with implicit q^0 start.
namespace series {

using Coeffs = std::vector<mpz_class>;

/// Product truncated to `length` coefficients.
Coeffs multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, std::size_t length);
/// Inverse of a series with constant term +-1, truncated to `length`.
Coeffs inverse(std::span<const mpz_class> a, std::size_t length);
/// a^e for e >= 0 by repeated squaring.
Coeffs power(std::span<const mpz_class> a, std::uint64_t e, std::size_t length);

/// prod_{n >= 1} (1 - q^{step n}) by multiplying out every factor.
Coeffs euler_product_dense(std::int64_t step, std::size_t length);
/// Same product from the pentagonal number theorem.
Coeffs euler_product_pentagonal(std::int64_t step, std::size_t length);

/// g^r for a series with g_0 = 1 and any integer r, through the recurrence
/// n f_n = sum_{j=1}^{n} ((r + 1) j - n) g_j f_{n-j}. Only the nonzero g_j
/// are visited, which makes sparse inputs cheap.
Coeffs power_recurrence(std::span<const mpz_class> g, std::int64_t r, std::size_t length);

}  // namespace series

enum class ExpansionMethod {
  /// Pentagonal-number base series raised with the power recurrence.
  Sparse,
  /// Multiplied-out products, repeated squaring, one inversion per negative
  /// exponent.
  Dense,
};

/// prod_{n >= 1} (1 - q^{delta n})^r through exponent precision - 1, i.e.
/// eta(delta z)^r with the q^{delta r / 24} prefactor removed.
QSeries eta_power(std::int64_t delta, std::int64_t r, std::int64_t precision,
                  ExpansionMethod method = ExpansionMethod::Sparse);

/// Full expansion of an eta-quotient at infinity, exact below `precision`.
/// Throws Error(FractionalLeadingPower) if sum delta r_delta != 0 (mod 24).
QSeries q_expansion(const EtaQuotient& e, std::int64_t precision,
                    ExpansionMethod method = ExpansionMethod::Sparse);

/// floor(k [SL2(Z) : Gamma0(N)] / 12) + 1.
std::int64_t sturm_bound(std::int64_t level, std::int64_t k);

}  // namespace etaq
