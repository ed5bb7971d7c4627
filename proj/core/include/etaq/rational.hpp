#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator so that equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT(implicit)

  Rational(const mpz_class& value) : value_(value) {}  // NOLINT(implicit)

  /// Throws Error(InvalidArgument) on a zero denominator.
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& get_mpq() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  mpz_class floor() const;
  mpz_class ceil() const;

  /// `a` for integers, `a/b` otherwise.
  std::string to_string() const;
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const { return entries_; }

  std::vector<Rational> apply(std::span<const Rational> x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact inverse by Gauss-Jordan over Q. Throws Error(SingularMatrix) when
/// the determinant vanishes and Error(InvalidArgument) for non-square input.
RationalMatrix invert_matrix(const RationalMatrix& m);

/// Exact determinant via fraction-free elimination.
Rational determinant(const RationalMatrix& m);

/// Rank over Q. Rows are scaled to integers and reduced with Bareiss
/// fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Rank over Q of an integer matrix given as rows of equal length.
std::size_t rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace etaq
