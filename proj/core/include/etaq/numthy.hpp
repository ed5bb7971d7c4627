#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace etaq {

/// Kronecker symbol (a/n), defined for every integer pair.
int kronecker(std::int64_t a, std::int64_t n);
int kronecker(const mpz_class& a, const mpz_class& n);

/// Positive divisors of n in ascending order. n must be positive.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Solution set {v = residue (mod modulus)} of a*v = b (mod m).
struct CongruenceClass {
  std::int64_t residue = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
};

/// Returns nullopt when gcd(a, m) does not divide b. Requires m >= 1.
std::optional<CongruenceClass> solve_congruence(std::int64_t a, std::int64_t b, std::int64_t m);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t floor_div(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t sigma0(std::int64_t n);
std::int64_t sigma1(std::int64_t n);

/// Index of Gamma_0(N) in SL_2(Z): N * prod_{p | N} (1 + 1/p).
std::int64_t gamma0_index(std::int64_t n);

/// Signed square-free part of n (n != 0): n = core * t^2.
std::int64_t squarefree_core(std::int64_t n);

}  // namespace etaq
