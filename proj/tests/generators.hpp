#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/numthy.hpp"

namespace gen {

/// Random eta-quotient at `level` with exponents in [-bound, bound].
inline etaq::EtaQuotient random_quotient(std::mt19937_64& rng, std::int64_t level, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<std::int64_t> r(etaq::divisors(level).size());
  for (auto& x : r) x = dist(rng);
  return etaq::EtaQuotient::from_dense(level, std::move(r));
}

/// Random quotient with even exponent sum passing both GHN congruences,
/// found by rejection sampling.
inline etaq::EtaQuotient random_ghn_quotient(std::mt19937_64& rng, std::int64_t level, std::int64_t bound) {
  for (;;) {
    auto e = random_quotient(rng, level, bound);
    if (e.exponent_sum() % 2 != 0) continue;
    if (etaq::floor_mod(e.weighted_sum(), 24) != 0 || etaq::floor_mod(e.coweighted_sum(), 24) != 0) continue;
    return e;
  }
}

}  // namespace gen
