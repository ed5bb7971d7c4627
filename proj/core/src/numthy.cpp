#include "etaq/numthy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "etaq/error.hpp"

namespace etaq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::OddWeight: return "OddWeight";
    case ErrorCode::NotGHN: return "NotGHN";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::InconsistentWeight: return "InconsistentWeight";
    case ErrorCode::FractionalLeadingPower: return "FractionalLeadingPower";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::TableInconsistency: return "TableInconsistency";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ZeroDimension: return "ZeroDimension";
    case ErrorCode::AlreadyIntegral: return "AlreadyIntegral";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int kronecker(std::int64_t a, std::int64_t n) {
  return kronecker(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(n)));
}

int kronecker(const mpz_class& a, const mpz_class& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

namespace {

// Returns g = gcd(a, b) >= 0 and x with a*x = g (mod b).
std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
  }
  return {old_r, old_s};
}

}  // namespace

std::optional<CongruenceClass> solve_congruence(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  a = floor_mod(a, m);
  b = floor_mod(b, m);
  const auto [g, x] = extended_gcd(a, m);
  if (g == 0) {
    // a = 0 and m = 0 cannot happen (m >= 1); g == 0 only if both vanish.
    return std::nullopt;
  }
  if (b % g != 0) return std::nullopt;
  const std::int64_t modulus = m / g;
  // a/g * x = 1 (mod m/g)
  const mpz_class residue = mpz_class(static_cast<long>(b / g)) * static_cast<long>(x);
  mpz_class reduced;
  mpz_fdiv_r_ui(reduced.get_mpz_t(), residue.get_mpz_t(), static_cast<unsigned long>(modulus));
  return CongruenceClass{static_cast<std::int64_t>(reduced.get_si()), modulus};
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  const auto f = factorize(n);
  return std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
}

std::int64_t sigma0(std::int64_t n) {
  std::int64_t s = 1;
  for (const auto& [p, e] : factorize(n)) s *= e + 1;
  return s;
}

std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d : divisors(n)) s += d;
  return s;
}

std::int64_t gamma0_index(std::int64_t n) {
  std::int64_t index = n;
  for (const auto& [p, e] : factorize(n)) index = index / p * (p + 1);
  return index;
}

std::int64_t squarefree_core(std::int64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "squarefree_core of zero");
  std::int64_t core = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(std::llabs(n)))
    if (e % 2 == 1) core *= p;
  return core;
}

}  // namespace etaq
