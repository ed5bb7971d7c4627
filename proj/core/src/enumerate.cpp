#include "etaq/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "etaq/error.hpp"
#include "etaq/numthy.hpp"

namespace etaq {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

Rational total_order(std::int64_t level, std::int64_t k) {
  return Rational(mpz_class(static_cast<long>(k * sigma1(level))), 12);
}

// Calls visit(v) for every nonnegative integer vector of the given length
// summing to total, in lexicographic order.
template <class Visit>
void for_each_composition(std::size_t length, std::int64_t total, Visit&& visit) {
  if (length == 0 || total < 0) return;
  std::vector<std::int64_t> v(length, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == length) {
      v[i] = remaining;
      visit(std::as_const(v));
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      v[i] = x;
      self(self, i + 1, remaining - x);
    }
  };
  rec(rec, 0, total);
}

std::vector<Rational> to_rationals(std::span<const std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

// Symmetric difference of two canonically sorted lists.
std::vector<EtaQuotient> disagreements(const std::vector<EtaQuotient>& a, const std::vector<EtaQuotient>& b) {
  std::vector<EtaQuotient> out;
  for (const auto& e : a)
    if (std::find(b.begin(), b.end(), e) == b.end()) out.push_back(e);
  for (const auto& e : b)
    if (std::find(a.begin(), a.end(), e) == a.end()) out.push_back(e);
  return out;
}

}  // namespace

std::int64_t required_divisor(std::int64_t p) {
  require_prime(p);
  if (p == 2) return 4;
  if (p == 3) return 3;
  switch (p % 24) {
    case 11: case 23: return 1;
    case 17: return 4;
    case 7: case 19: return 3;
    case 5: return 2;
    case 13: return 6;
    case 1: return 12;
    default: break;
  }
  throw std::logic_error("prime with unexpected residue mod 24");
}

std::optional<std::int64_t> weight_condition(std::int64_t p, std::int64_t k) {
  const std::int64_t h = required_divisor(p);
  if (floor_mod(k, h) != 0) return std::nullopt;
  return h;
}

PrimeLevelParams prime_params(std::int64_t p, std::int64_t k) {
  require_prime(p);
  if (p < 5) throw Error(ErrorCode::InvalidArgument, "prime-level walk needs p >= 5");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  const auto h = weight_condition(p, k);
  if (!h)
    throw Error(ErrorCode::Inadmissible, "weight " + std::to_string(k) + " is not admissible at level " +
                                             std::to_string(p));
  PrimeLevelParams params;
  params.p = p;
  params.k = k;
  params.h = *h;
  params.d = (p - 1) / std::gcd<std::int64_t>(24, p - 1);
  if (2 * params.h * params.d != p - 1) throw std::logic_error("p - 1 != 2hd");
  const auto cls = solve_congruence(24, 2 * k, p - 1);
  if (!cls || cls->modulus != params.d) throw std::logic_error("admissible class for v_1 not found");
  params.c = cls->residue;
  if ((k * (p + 1)) % 12 != 0) throw std::logic_error("k (p + 1) / 12 is not integral");
  params.L = k * (p + 1) / 12;
  return params;
}

std::int64_t count_cusp_eta_unified(const PrimeLevelParams& s) {
  // #{v in [1, L-1] : v = c (mod d)}
  if (s.L < 2) return 0;
  return floor_div(s.L - 1 - s.c, s.d) - floor_div(0 - s.c, s.d);
}

std::int64_t count_cusp_eta_three_case(const PrimeLevelParams& s) {
  const std::int64_t q = floor_div(s.L, s.d);
  const std::int64_t rem = s.L - q * s.d;
  if (s.c == rem) {
    if (rem != 0) throw std::logic_error("case c = L mod d with a non-integral L/d");
    return q - 1;
  }
  if (s.c < rem) return rem == 0 ? q : q + 1;  // ceil(L/d)
  return q;                                     // floor(L/d)
}

std::int64_t count_cusp_eta(std::int64_t p, std::int64_t k) {
  const PrimeLevelParams s = prime_params(p, k);
  const std::int64_t unified = count_cusp_eta_unified(s);
  const std::int64_t three_case = count_cusp_eta_three_case(s);
  if (unified != three_case)
    throw std::logic_error("cusp count mismatch at p=" + std::to_string(p) + " k=" + std::to_string(k) +
                           ": unified " + std::to_string(unified) + ", three-case " +
                           std::to_string(three_case));
  return unified;
}

std::vector<EtaQuotient> list_cusp_eta(std::int64_t p, std::int64_t k) {
  const PrimeLevelParams s = prime_params(p, k);
  const OrderSystem system(p);
  std::vector<EtaQuotient> out;
  // The admissible class is symmetric under v_1 <-> v_p (2c = L mod d), so
  // walking the order at infinity visits the same points in canonical order.
  std::int64_t start = s.c == 0 ? s.d : s.c;
  for (std::int64_t v_inf = start; v_inf < s.L; v_inf += s.d) {
    const std::vector<Rational> v{Rational(s.L - v_inf), Rational(v_inf)};
    const GeneralizedEtaQuotient r(p, system.exponents(v));
    if (!r.is_integral())
      throw std::logic_error("non-integral exponents at admissible point " + r.to_string());
    out.push_back(r.to_integral());
  }
  return out;
}

std::vector<EtaQuotient> noncusp_eta(std::int64_t p, std::int64_t k) {
  require_prime(p);
  if (p < 5) throw Error(ErrorCode::InvalidArgument, "non-cusp pair needs p >= 5");
  if (k <= 0 || k % ((p - 1) / 2) != 0) return {};
  const std::int64_t a = 2 * k / (p - 1);
  return {EtaQuotient(p, {{1, -a}, {p, p * a}}), EtaQuotient(p, {{1, p * a}, {p, -a}})};
}

void sort_canonical(std::vector<EtaQuotient>& quotients) {
  using Key = std::tuple<Rational, std::vector<Rational>, std::vector<std::int64_t>>;
  std::vector<std::pair<Key, EtaQuotient>> keyed;
  keyed.reserve(quotients.size());
  for (auto& e : quotients) {
    const CuspOrders v = cusp_orders(e);
    keyed.emplace_back(Key{v.at(e.level()), {v.orders().begin(), v.orders().end()},
                           {e.exponents().begin(), e.exponents().end()}},
                       std::move(e));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  quotients.clear();
  for (auto& [key, e] : keyed) quotients.push_back(std::move(e));
}

bool squarefree_weight_condition(std::int64_t level, std::int64_t k) {
  if (!is_squarefree(level))
    throw Error(ErrorCode::NotSquareFree, std::to_string(level) + " is not square-free");
  std::int64_t g = 0;
  for (std::int64_t delta : divisors(level))
    if (delta != level) g = std::gcd(g, level / delta - 1);
  g = std::gcd(g, std::int64_t{24});
  return floor_mod(2 * k, g) == 0;
}

ScanResult scan_orders(std::int64_t level, std::int64_t k) {
  const OrderSystem system(level);
  const Rational total = total_order(level, k);
  ScanResult result;
  if (!total.is_integer() || total.sign() < 0) return result;
  const std::size_t n = system.divisors().size();
  for_each_composition(n, total.numerator().get_si(), [&](const std::vector<std::int64_t>& v) {
    ++result.candidates;
    const GeneralizedEtaQuotient r(level, system.exponents(to_rationals(v)));
    if (!r.is_integral()) return;
    EtaQuotient e = r.to_integral();
    if (!ghn_check(e)) return;
    result.quotients.push_back(std::move(e));
  });
  sort_canonical(result.quotients);
  return result;
}

ScanResult scan_exponent_box(std::int64_t level, std::int64_t k) {
  const OrderSystem system(level);
  const Rational total = total_order(level, k);
  const std::size_t n = system.divisors().size();
  ScanResult result;
  if (total.sign() < 0) return result;
  // Extremes of the linear map v -> 24 M^{-1} v over the simplex are attained
  // at its vertices total * e_d.
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn, mx;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational x = system.inverse()(i, j) * total * 24;
      if (j == 0 || x < mn) mn = x;
      if (j == 0 || x > mx) mx = x;
    }
    lo[i] = mn.ceil().get_si();
    hi[i] = mx.floor().get_si();
  }
  const std::int64_t target = 2 * k;
  std::vector<std::int64_t> r(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
    if (i + 1 == n) {
      const std::int64_t last = target - partial;
      if (last < lo[i] || last > hi[i]) return;
      r[i] = last;
      ++result.candidates;
      EtaQuotient e = EtaQuotient::from_dense(level, r);
      if (!ghn_check(e)) return;
      for (std::int64_t d : e.divisors())
        if (cusp_order(e, d).sign() < 0) return;
      result.quotients.push_back(std::move(e));
      return;
    }
    for (std::int64_t x = lo[i]; x <= hi[i]; ++x) {
      r[i] = x;
      self(self, i + 1, partial + x);
    }
  };
  rec(rec, 0, 0);
  sort_canonical(result.quotients);
  return result;
}

namespace {

void split_by_class(const std::vector<EtaQuotient>& all, std::vector<EtaQuotient>& cusp,
                    std::vector<EtaQuotient>& noncusp) {
  for (const auto& e : all) {
    if (classify(e) == Classification::CuspForm)
      cusp.push_back(e);
    else
      noncusp.push_back(e);
  }
}

std::int64_t count_cusp(const std::vector<EtaQuotient>& all) {
  return std::count_if(all.begin(), all.end(),
                       [](const EtaQuotient& e) { return classify(e) == Classification::CuspForm; });
}

}  // namespace

EnumerationReport enumerate_prime(std::int64_t p, std::int64_t k) {
  require_prime(p);
  if (p < 5) throw Error(ErrorCode::InvalidArgument, "prime-level enumeration needs p >= 5");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  EnumerationReport report;
  report.level = p;
  report.weight = k;
  report.total_order = total_order(p, k);
  report.admissible = weight_condition(p, k).has_value();
  if (report.admissible) {
    report.params = prime_params(p, k);
    report.cusp = list_cusp_eta(p, k);
    report.formula_count = count_cusp_eta(p, k);
  } else {
    report.formula_count = 0;
  }
  report.noncusp = noncusp_eta(p, k);
  sort_canonical(report.noncusp);

  const ScanResult oracle = scan_exponent_box(p, k);
  report.oracle_count = count_cusp(oracle.quotients);
  std::vector<EtaQuotient> walked = report.cusp;
  walked.insert(walked.end(), report.noncusp.begin(), report.noncusp.end());
  sort_canonical(walked);
  report.scan_disagreements = disagreements(walked, oracle.quotients);
  return report;
}

EnumerationReport enumerate_squarefree(std::int64_t level, std::int64_t k) {
  if (!is_squarefree(level))
    throw Error(ErrorCode::NotSquareFree, std::to_string(level) + " is not square-free");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  EnumerationReport report;
  report.level = level;
  report.weight = k;
  report.total_order = total_order(level, k);
  report.admissible = squarefree_weight_condition(level, k);

  const ScanResult lattice = scan_orders(level, k);
  const ScanResult oracle = scan_exponent_box(level, k);
  split_by_class(lattice.quotients, report.cusp, report.noncusp);
  report.oracle_count = count_cusp(oracle.quotients);
  report.scan_disagreements = disagreements(lattice.quotients, oracle.quotients);
  return report;
}

mpz_class hyperplane_point_count(std::int64_t coordinates, std::int64_t total) {
  if (coordinates < 1 || total < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(total + coordinates - 1),
               static_cast<unsigned long>(coordinates - 1));
  return out;
}

std::int64_t pq_upper_bound(std::int64_t p, std::int64_t q, std::int64_t k) {
  require_prime(p);
  require_prime(q);
  if (p == q || p <= 3 || q <= 3)
    throw Error(ErrorCode::InvalidArgument, "p and q must be distinct primes greater than 3");
  const std::int64_t numerator = k * (p + 1) * (q + 1);
  if (numerator % 12 != 0 || numerator < 0) return 0;
  const std::int64_t total = numerator / 12;
  const std::int64_t pm = p + 1, qm = q + 1, phi = (p - 1) * (q - 1);
  std::int64_t count = 0;
  for (std::int64_t v1 = 0; v1 <= total; ++v1)
    for (std::int64_t vp = 0; v1 + vp <= total; ++vp)
      for (std::int64_t vq = 0; v1 + vp + vq <= total; ++vq) {
        const std::int64_t vpq = total - v1 - vp - vq;
        const bool pass = floor_mod(24 * (v1 + vp), pm) == 0 &&
                          floor_mod(24 * (v1 + vq), qm) == 0 &&
                          floor_mod(24 * (vp + vpq), qm) == 0 &&
                          floor_mod(24 * (vq + vpq), pm) == 0 &&
                          floor_mod(24 * (v1 + vpq) - 2 * k * (1 + p * q), phi) == 0 &&
                          floor_mod(24 * (vp + vq) - 2 * k * (p + q), phi) == 0;
        count += pass;
      }
  return count;
}

}  // namespace etaq
