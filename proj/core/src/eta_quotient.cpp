#include "etaq/eta_quotient.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "etaq/error.hpp"
#include "etaq/numthy.hpp"

namespace etaq {

namespace {

std::size_t divisor_index(std::span<const std::int64_t> divs, std::int64_t d) {
  const auto it = std::lower_bound(divs.begin(), divs.end(), d);
  if (it == divs.end() || *it != d)
    throw Error(ErrorCode::NotDivisor, std::to_string(d) + " does not divide the level");
  return static_cast<std::size_t>(it - divs.begin());
}

void check_level(std::int64_t level) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Shared by the integral and rational variants; r is aligned with divs.
template <class Exponent>
Rational order_at(std::int64_t level, std::span<const std::int64_t> divs,
                  std::span<const Exponent> r, std::int64_t d) {
  divisor_index(divs, d);
  const std::int64_t width_factor = std::gcd(d, level / d) * d;
  Rational sum;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::int64_t g = std::gcd(d, divs[i]);
    sum += Rational(r[i]) * Rational(mpz_class(static_cast<long>(g * g)),
                                     mpz_class(static_cast<long>(divs[i])));
  }
  return sum * Rational(mpz_class(static_cast<long>(level)),
                        mpz_class(static_cast<long>(24 * width_factor)));
}

}  // namespace

// --- EtaQuotient -----------------------------------------------------------

EtaQuotient::EtaQuotient(std::int64_t level) : level_(level) {
  check_level(level);
  divisors_ = etaq::divisors(level);
  exponents_.assign(divisors_.size(), 0);
}

EtaQuotient::EtaQuotient(std::int64_t level,
                         std::span<const std::pair<std::int64_t, std::int64_t>> entries)
    : EtaQuotient(level) {
  for (const auto& [delta, r] : entries) exponents_[divisor_index(divisors_, delta)] += r;
}

EtaQuotient::EtaQuotient(std::int64_t level,
                         std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries)
    : EtaQuotient(level, std::span<const std::pair<std::int64_t, std::int64_t>>(entries.begin(), entries.size())) {}

EtaQuotient EtaQuotient::from_dense(std::int64_t level, std::vector<std::int64_t> exponents) {
  EtaQuotient e(level);
  if (exponents.size() != e.divisors_.size())
    throw Error(ErrorCode::InvalidArgument, "exponent vector does not match divisor count");
  e.exponents_ = std::move(exponents);
  return e;
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const {
  const auto it = std::lower_bound(divisors_.begin(), divisors_.end(), delta);
  if (it == divisors_.end() || *it != delta) return 0;
  return exponents_[static_cast<std::size_t>(it - divisors_.begin())];
}

std::int64_t EtaQuotient::exponent_sum() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::int64_t{0});
}

std::int64_t EtaQuotient::weighted_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) s += divisors_[i] * exponents_[i];
  return s;
}

std::int64_t EtaQuotient::coweighted_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) s += (level_ / divisors_[i]) * exponents_[i];
  return s;
}

EtaQuotient EtaQuotient::lift_to(std::int64_t level) const {
  if (level < 1 || level % level_ != 0)
    throw Error(ErrorCode::InvalidArgument, "target level must be a multiple of the level");
  EtaQuotient out(level);
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    out.exponents_[divisor_index(out.divisors_, divisors_[i])] = exponents_[i];
  return out;
}

EtaQuotient EtaQuotient::reciprocal() const { return pow(-1); }

EtaQuotient EtaQuotient::pow(std::int64_t t) const {
  EtaQuotient out = *this;
  for (auto& r : out.exponents_) r *= t;
  return out;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
  const std::int64_t level = std::lcm(a.level_, b.level_);
  EtaQuotient out = a.lift_to(level);
  const EtaQuotient other = b.lift_to(level);
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(divisors_[i]) + ':' + std::to_string(exponents_[i]);
  }
  return out;
}

EtaQuotient EtaQuotient::parse(std::string_view text, std::int64_t level) {
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "expected delta:r, got '" + std::string(item) + "'");
    const std::int64_t delta = parse_int(trim(item.substr(0, colon)));
    const std::int64_t r = parse_int(trim(item.substr(colon + 1)));
    if (delta < 1) throw Error(ErrorCode::ParseError, "delta must be positive");
    if (!entries.empty() && delta <= entries.back().first)
      throw Error(ErrorCode::ParseError, "deltas must be strictly ascending");
    entries.emplace_back(delta, r);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw Error(ErrorCode::ParseError, "trailing comma");
  }
  if (level == 0) {
    level = 1;
    for (const auto& [delta, r] : entries) level = std::lcm(level, delta);
  }
  check_level(level);
  for (const auto& [delta, r] : entries)
    if (level % delta != 0)
      throw Error(ErrorCode::NotDivisor,
                  std::to_string(delta) + " does not divide level " + std::to_string(level));
  return EtaQuotient(level, entries);
}

// --- GeneralizedEtaQuotient -------------------------------------------------

GeneralizedEtaQuotient::GeneralizedEtaQuotient(std::int64_t level, std::vector<Rational> exponents)
    : level_(level), exponents_(std::move(exponents)) {
  check_level(level);
  divisors_ = etaq::divisors(level);
  if (exponents_.size() != divisors_.size())
    throw Error(ErrorCode::InvalidArgument, "exponent vector does not match divisor count");
}

GeneralizedEtaQuotient::GeneralizedEtaQuotient(const EtaQuotient& e)
    : level_(e.level()), divisors_(e.divisors().begin(), e.divisors().end()) {
  for (std::int64_t r : e.exponents()) exponents_.emplace_back(r);
}

const Rational& GeneralizedEtaQuotient::exponent(std::int64_t delta) const {
  return exponents_[divisor_index(divisors_, delta)];
}

bool GeneralizedEtaQuotient::is_integral() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const Rational& r) { return r.is_integer(); });
}

mpz_class GeneralizedEtaQuotient::denominator_lcm() const {
  mpz_class l = 1;
  for (const Rational& r : exponents_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
  return l;
}

EtaQuotient GeneralizedEtaQuotient::to_integral() const {
  if (!is_integral()) throw Error(ErrorCode::InvalidArgument, "exponents are not integral");
  std::vector<std::int64_t> dense;
  for (const Rational& r : exponents_) {
    if (!r.numerator().fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
    dense.push_back(r.numerator().get_si());
  }
  return EtaQuotient::from_dense(level_, std::move(dense));
}

std::string GeneralizedEtaQuotient::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (exponents_[i].is_zero()) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(divisors_[i]) + ':' + exponents_[i].to_string();
  }
  return out;
}

// --- CuspOrders ---------------------------------------------------------------

CuspOrders::CuspOrders(std::int64_t level, std::vector<Rational> orders)
    : level_(level), orders_(std::move(orders)) {
  check_level(level);
  divisors_ = etaq::divisors(level);
  if (orders_.size() != divisors_.size())
    throw Error(ErrorCode::InvalidArgument, "order vector does not match divisor count");
}

const Rational& CuspOrders::at(std::int64_t d) const { return orders_[divisor_index(divisors_, d)]; }

Rational CuspOrders::sum() const {
  Rational s;
  for (const Rational& v : orders_) s += v;
  return s;
}

bool CuspOrders::all_integral() const {
  return std::all_of(orders_.begin(), orders_.end(), [](const Rational& v) { return v.is_integer(); });
}

// --- Characters and classification -------------------------------------------

int QuadChar::operator()(std::int64_t n) const {
  if (std::gcd(n, modulus_) != 1) return 0;
  return kronecker(core_, n);
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NotGHN: return "not_ghn";
    case Classification::WeaklyHolomorphic: return "weakly_holomorphic";
    case Classification::ModularForm: return "modular_form";
    case Classification::CuspForm: return "cusp_form";
  }
  return "unknown";
}

std::optional<std::int64_t> weight(const EtaQuotient& e) {
  const std::int64_t s = e.exponent_sum();
  if (s % 2 != 0) return std::nullopt;
  return s / 2;
}

bool ghn_check(const EtaQuotient& e) {
  if (!weight(e)) throw Error(ErrorCode::OddWeight, "exponent sum of " + e.to_string() + " is odd");
  return floor_mod(e.weighted_sum(), 24) == 0 && floor_mod(e.coweighted_sum(), 24) == 0;
}

QuadChar character_of(const EtaQuotient& e) {
  const auto k = weight(e);
  if (!k || !ghn_check(e))
    throw Error(ErrorCode::NotGHN, e.to_string() + " fails the GHN congruences");
  // Parity of the exponent of each prime in prod delta^{r_delta}.
  std::map<std::int64_t, int> parity;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) {
    if (e.exponents()[i] % 2 == 0) continue;
    for (const auto& [p, a] : factorize(e.divisors()[i])) parity[p] ^= (a & 1);
  }
  std::int64_t core = (*k % 2 == 0) ? 1 : -1;
  for (const auto& [p, odd] : parity)
    if (odd) core *= p;
  return QuadChar(e.level(), core);
}

Rational cusp_order(const EtaQuotient& e, std::int64_t d) {
  return order_at<std::int64_t>(e.level(), e.divisors(), e.exponents(), d);
}

Rational cusp_order(const GeneralizedEtaQuotient& e, std::int64_t d) {
  return order_at<Rational>(e.level(), e.divisors(), e.exponents(), d);
}

CuspOrders cusp_orders(const EtaQuotient& e) {
  std::vector<Rational> v;
  for (std::int64_t d : e.divisors()) v.push_back(cusp_order(e, d));
  return CuspOrders(e.level(), std::move(v));
}

CuspOrders cusp_orders(const GeneralizedEtaQuotient& e) {
  std::vector<Rational> v;
  for (std::int64_t d : e.divisors()) v.push_back(cusp_order(e, d));
  return CuspOrders(e.level(), std::move(v));
}

Classification classify(const EtaQuotient& e) {
  if (!weight(e) || !ghn_check(e)) return Classification::NotGHN;
  bool all_positive = true;
  for (std::int64_t d : e.divisors()) {
    const int s = cusp_order(e, d).sign();
    if (s < 0) return Classification::WeaklyHolomorphic;
    if (s == 0) all_positive = false;
  }
  return all_positive ? Classification::CuspForm : Classification::ModularForm;
}

// --- Orders <-> exponents -------------------------------------------------------

OrderSystem::OrderSystem(std::int64_t level) : level_(level) {
  check_level(level);
  if (!is_squarefree(level))
    throw Error(ErrorCode::NotSquareFree, std::to_string(level) + " is not square-free");
  divisors_ = etaq::divisors(level);
  const std::size_t n = divisors_.size();
  forward_ = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = divisors_[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t delta = divisors_[j];
      const std::int64_t g = std::gcd(d, delta);
      forward_(i, j) = Rational(mpz_class(static_cast<long>(level)) * (g * g),
                                mpz_class(static_cast<long>(std::gcd(d, level / d) * d)) * delta);
    }
  }
  inverse_ = invert_matrix(forward_);
}

std::vector<Rational> OrderSystem::orders(std::span<const Rational> exponents) const {
  auto v = forward_.apply(exponents);
  for (auto& x : v) x /= 24;
  return v;
}

std::vector<Rational> OrderSystem::exponents(std::span<const Rational> orders) const {
  std::vector<Rational> scaled(orders.begin(), orders.end());
  for (auto& x : scaled) x *= 24;
  return inverse_.apply(scaled);
}

GeneralizedEtaQuotient exponents_from_orders(std::int64_t level, std::int64_t k, const CuspOrders& v) {
  if (v.level() != level) throw Error(ErrorCode::InvalidArgument, "order vector has a different level");
  const OrderSystem system(level);
  const Rational expected = Rational(mpz_class(static_cast<long>(k * sigma1(level))), 12);
  if (v.sum() != expected)
    throw Error(ErrorCode::InconsistentWeight,
                "sum of orders is " + v.sum().to_string() + ", expected " + expected.to_string());
  return GeneralizedEtaQuotient(level, system.exponents(v.orders()));
}

}  // namespace etaq
