#include "etaq/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "etaq/error.hpp"
#include "etaq/numthy.hpp"

namespace etaq {

namespace series {

Coeffs multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, std::size_t length) {
  Coeffs c(length);
  const std::size_t na = std::min(a.size(), length);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    const std::size_t nb = std::min(b.size(), length - i);
    for (std::size_t j = 0; j < nb; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

Coeffs inverse(std::span<const mpz_class> a, std::size_t length) {
  if (a.empty() || (a[0] != 1 && a[0] != -1))
    throw Error(ErrorCode::InvalidArgument, "series inverse needs constant term +-1");
  const int a0 = a[0] == 1 ? 1 : -1;
  Coeffs b(length);
  if (length == 0) return b;
  b[0] = a0;
  for (std::size_t n = 1; n < length; ++n) {
    mpz_class acc = 0;
    const std::size_t top = std::min(n, a.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (a[j] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), b[n - j].get_mpz_t());
    }
    b[n] = a0 == 1 ? mpz_class(-acc) : acc;
  }
  return b;
}

Coeffs power(std::span<const mpz_class> a, std::uint64_t e, std::size_t length) {
  Coeffs result(length);
  if (length == 0) return result;
  result[0] = 1;
  Coeffs base(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), length)));
  while (e > 0) {
    if (e & 1) result = multiply(result, base, length);
    e >>= 1;
    if (e > 0) base = multiply(base, base, length);
  }
  return result;
}

Coeffs euler_product_dense(std::int64_t step, std::size_t length) {
  Coeffs c(length);
  if (length == 0) return c;
  c[0] = 1;
  const auto s = static_cast<std::size_t>(step);
  for (std::size_t m = s; m < length; m += s) {
    // multiply by (1 - q^m) in place, high to low
    for (std::size_t i = length - 1; i >= m; --i) c[i] -= c[i - m];
  }
  return c;
}

Coeffs euler_product_pentagonal(std::int64_t step, std::size_t length) {
  Coeffs c(length);
  if (length == 0) return c;
  const auto s = static_cast<std::size_t>(step);
  c[0] = 1;
  // sum over m != 0 of (-1)^m q^{step m(3m-1)/2}, paired as m and -m
  for (std::size_t m = 1;; ++m) {
    const std::size_t e1 = s * (m * (3 * m - 1) / 2);
    const std::size_t e2 = s * (m * (3 * m + 1) / 2);
    if (e1 >= length) break;
    const int sign = (m % 2 == 0) ? 1 : -1;
    c[e1] += sign;
    if (e2 < length) c[e2] += sign;
  }
  return c;
}

Coeffs power_recurrence(std::span<const mpz_class> g, std::int64_t r, std::size_t length) {
  if (g.empty() || g[0] != 1)
    throw Error(ErrorCode::InvalidArgument, "power recurrence needs constant term 1");
  Coeffs f(length);
  if (length == 0) return f;
  f[0] = 1;
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < std::min(g.size(), length); ++j)
    if (g[j] != 0) support.push_back(j);
  const mpz_class r1 = mpz_class(static_cast<long>(r)) + 1;
  mpz_class acc, factor;
  for (std::size_t n = 1; n < length; ++n) {
    acc = 0;
    for (std::size_t j : support) {
      if (j > n) break;
      if (f[n - j] == 0) continue;
      factor = r1 * static_cast<unsigned long>(j) - static_cast<unsigned long>(n);
      factor *= g[j];
      mpz_addmul(acc.get_mpz_t(), factor.get_mpz_t(), f[n - j].get_mpz_t());
    }
    mpz_divexact_ui(f[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return f;
}

}  // namespace series

// --- QSeries ---------------------------------------------------------------------

QSeries::QSeries(std::int64_t leading_exponent, std::vector<mpz_class> coefficients)
    : n0_(leading_exponent), coeffs_(std::move(coefficients)) {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  if (first == coeffs_.end()) return;
  n0_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

QSeries QSeries::one(std::int64_t precision) {
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max<std::int64_t>(precision, 0)));
  if (!c.empty()) c[0] = 1;
  return QSeries(0, std::move(c));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class QSeries::coefficient(std::int64_t n) const {
  if (n >= precision()) throw Error(ErrorCode::InvalidArgument, "coefficient beyond precision");
  if (n < n0_) return 0;
  return coeffs_[static_cast<std::size_t>(n - n0_)];
}

QSeries QSeries::truncate(std::int64_t precision) const {
  if (precision >= this->precision()) return *this;
  if (precision <= n0_) return QSeries(precision, {});
  return QSeries(n0_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + (precision - n0_)));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::int64_t n0 = a.n0_ + b.n0_;
  const std::int64_t prec = std::min(a.precision() + b.n0_, b.precision() + a.n0_);
  const auto length = static_cast<std::size_t>(std::max<std::int64_t>(prec - n0, 0));
  return QSeries(n0, series::multiply(a.coeffs_, b.coeffs_, length));
}

std::string QSeries::to_string() const {
  std::string out = "q^{" + std::to_string(n0_) + "} * (";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (i == 0) {
      out += c.get_str();
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += mpz_class(abs(c)).get_str();
    }
    if (i == 1) out += "*q";
    if (i > 1) out += "*q^" + std::to_string(i);
  }
  return out + ")";
}

QSeries QSeries::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError, std::string(why) + " in '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("q^{", 0) != 0) throw fail("missing q^{n0} prefix");
  const auto close = s.find("}*(");
  if (close == std::string::npos || s.back() != ')') throw fail("malformed series");
  std::int64_t n0 = 0;
  {
    const char* first = s.data() + 3;
    const char* last = s.data() + close;
    const auto [p, ec] = std::from_chars(first, last, n0);
    if (ec != std::errc{} || p != last) throw fail("bad leading exponent");
  }
  const std::string body = s.substr(close + 3, s.size() - close - 4);
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      if (body[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos < body.size() && body[pos] == '-') {
      sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
    if (end == pos) throw fail("expected a coefficient");
    mpz_class c(body.substr(pos, end - pos));
    pos = end;
    std::size_t expected = coeffs.size();
    std::size_t exponent = 0;
    if (pos < body.size() && body[pos] == '*') {
      if (body.compare(pos, 2, "*q") != 0) throw fail("expected *q");
      pos += 2;
      exponent = 1;
      if (pos < body.size() && body[pos] == '^') {
        ++pos;
        std::size_t e_end = pos;
        while (e_end < body.size() && std::isdigit(static_cast<unsigned char>(body[e_end]))) ++e_end;
        if (e_end == pos) throw fail("expected an exponent");
        exponent = std::stoul(body.substr(pos, e_end - pos));
        pos = e_end;
      }
    }
    if (exponent != expected) throw fail("terms must list consecutive exponents");
    coeffs.push_back(sign * c);
  }
  return QSeries(n0, std::move(coeffs));
}

// --- eta expansions ------------------------------------------------------------------

QSeries eta_power(std::int64_t delta, std::int64_t r, std::int64_t precision, ExpansionMethod method) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
  const auto length = static_cast<std::size_t>(precision);
  if (r == 0) return QSeries::one(precision);
  if (method == ExpansionMethod::Sparse) {
    const auto base = series::euler_product_pentagonal(delta, length);
    return QSeries(0, series::power_recurrence(base, r, length));
  }
  const auto base = series::euler_product_dense(delta, length);
  const auto magnitude = static_cast<std::uint64_t>(r < 0 ? -r : r);
  auto positive = series::power(base, magnitude, length);
  if (r > 0) return QSeries(0, std::move(positive));
  return QSeries(0, series::inverse(positive, length));
}

QSeries q_expansion(const EtaQuotient& e, std::int64_t precision, ExpansionMethod method) {
  const std::int64_t weighted = e.weighted_sum();
  if (floor_mod(weighted, 24) != 0)
    throw Error(ErrorCode::FractionalLeadingPower,
                "sum delta r_delta = " + std::to_string(weighted) + " is not divisible by 24");
  const std::int64_t n0 = weighted / 24;
  if (precision <= n0) return QSeries(precision, {});
  const std::int64_t rel = precision - n0;
  const auto length = static_cast<std::size_t>(rel);
  series::Coeffs acc(length);
  acc[0] = 1;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) {
    const std::int64_t r = e.exponents()[i];
    if (r == 0 || e.divisors()[i] >= rel) continue;
    const QSeries factor = eta_power(e.divisors()[i], r, rel, method);
    acc = series::multiply(acc, factor.coefficients(), length);
  }
  return QSeries(n0, std::move(acc));
}

std::int64_t sturm_bound(std::int64_t level, std::int64_t k) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  return floor_div(k * gamma0_index(level), 12) + 1;
}

}  // namespace etaq
