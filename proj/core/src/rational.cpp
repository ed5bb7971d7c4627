#include "etaq/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "etaq/error.hpp"

namespace etaq {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return out;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  return is_integer() ? numerator().get_str() : numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(mpz_class(std::string(text)));
    return Rational(mpz_class(std::string(text.substr(0, slash))),
                    mpz_class(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::InvalidArgument, "entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in product");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix invert_matrix(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "determinant is zero");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
  }
  return rows;
}

// Bareiss elimination in place. Returns the rank and, for square input, the
// sign-corrected last pivot (the determinant) when the matrix is full rank.
std::pair<std::size_t, mpz_class> bareiss(std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n_rows = a.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : a.front().size();
  mpz_class prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t pivot = r;
    while (pivot < n_rows && a[pivot][c] == 0) ++pivot;
    if (pivot == n_rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return {r, sign * prev};
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    scale *= l;
  }
  auto rows = integer_rows(m);
  const auto [r, last] = bareiss(rows);
  if (r < m.rows()) return 0;
  return Rational(last, scale);
}

std::size_t rank(const RationalMatrix& m) {
  auto rows = integer_rows(m);
  return bareiss(rows).first;
}

std::size_t rank(std::vector<std::vector<mpz_class>> rows) {
  if (!rows.empty()) {
    const std::size_t width = rows.front().size();
    for (const auto& row : rows)
      if (row.size() != width) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
  }
  return bareiss(rows).first;
}

}  // namespace etaq
