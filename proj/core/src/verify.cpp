#include "etaq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "etaq/dims.hpp"
#include "etaq/enumerate.hpp"
#include "etaq/error.hpp"
#include "etaq/numthy.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

IndependenceCertificate independence_rank(const std::vector<EtaQuotient>& quotients, std::int64_t k,
                                          std::int64_t level) {
  IndependenceCertificate cert;
  cert.level = level;
  cert.weight = k;
  cert.quotient_count = static_cast<std::int64_t>(quotients.size());
  const std::int64_t bound = sturm_bound(level, k);
  std::vector<std::int64_t> leads;
  for (const auto& e : quotients) {
    if (level % e.level() != 0)
      throw Error(ErrorCode::InvalidArgument, "quotient level does not divide " + std::to_string(level));
    if (weight(e) != k)
      throw Error(ErrorCode::WeightMismatch, e.to_string() + " does not have weight " + std::to_string(k));
    leads.push_back(e.weighted_sum() / 24);
  }
  if (quotients.empty()) {
    cert.independent = true;
    cert.distinct_leading_exponents = true;
    return cert;
  }
  cert.first_exponent = *std::min_element(leads.begin(), leads.end());
  cert.cols = std::max<std::int64_t>(bound - cert.first_exponent, 0);
  cert.rows = cert.quotient_count;
  cert.distinct_leading_exponents = std::set<std::int64_t>(leads.begin(), leads.end()).size() == leads.size();

  std::vector<std::vector<mpz_class>> matrix;
  for (const auto& e : quotients) {
    const QSeries s = q_expansion(e, bound);
    std::vector<mpz_class> row(static_cast<std::size_t>(cert.cols));
    for (std::int64_t j = 0; j < cert.cols; ++j) row[static_cast<std::size_t>(j)] = s.coefficient(cert.first_exponent + j);
    matrix.push_back(std::move(row));
  }
  cert.rank = static_cast<std::int64_t>(rank(std::move(matrix)));
  cert.independent = cert.rank == cert.quotient_count;
  return cert;
}

std::string_view to_string(RatioCase c) {
  switch (c) {
    case RatioCase::QuadraticOddWeight: return "quadratic_odd_weight";
    case RatioCase::TrivialEvenWeight: return "trivial_even_weight";
    case RatioCase::Combined: return "combined";
  }
  return "unknown";
}

Rational span_ratio_limit(std::int64_t p) {
  const std::int64_t h = required_divisor(p);
  return p % 4 == 3 ? Rational(2 * h) / (p - 1) : Rational(h) / (p - 1);
}

SpanRatio span_ratio(std::int64_t p, std::int64_t k) {
  if (!weight_condition(p, k))
    throw Error(ErrorCode::Inadmissible, "weight " + std::to_string(k) + " is not admissible at level " +
                                             std::to_string(p));
  SpanRatio out;
  out.p = p;
  out.k = k;
  out.cusp_count = count_cusp_eta(p, k);
  out.noncusp_count = static_cast<std::int64_t>(noncusp_eta(p, k).size());
  out.limit = span_ratio_limit(p);
  if (p % 4 == 3) {
    if (k % 2 == 1) {
      out.ratio_case = RatioCase::QuadraticOddWeight;
      out.dimension = dim_quadratic(p, k).dim_cusp;
    } else {
      out.ratio_case = RatioCase::TrivialEvenWeight;
      out.dimension = dim_gamma0_p(p, k).dim_cusp;
    }
  } else {
    out.ratio_case = RatioCase::Combined;
    out.dimension = dim_gamma0_p(p, k).dim_cusp + dim_quadratic(p, k).dim_cusp;
  }
  if (out.dimension == 0)
    throw Error(ErrorCode::ZeroDimension, "cusp space has dimension zero at p=" + std::to_string(p) +
                                              " k=" + std::to_string(k));
  out.ratio = Rational(out.cusp_count) / Rational(out.dimension);
  return out;
}

CuspOrders prime_orders_from_infinity(std::int64_t p, std::int64_t k, std::int64_t v_inf) {
  const Rational total = Rational(k * (p + 1)) / 12;
  return CuspOrders(p, {total - Rational(v_inf), Rational(v_inf)});
}

LiftCertificate fractional_power_lift(std::int64_t p, std::int64_t k, const CuspOrders& v) {
  if (!is_prime(p) || p < 5) throw Error(ErrorCode::InvalidArgument, "lift needs a prime p >= 5");
  for (const Rational& x : v.orders())
    if (!x.is_integer() || x.sign() < 0)
      throw Error(ErrorCode::InvalidArgument, "orders must be nonnegative integers");
  GeneralizedEtaQuotient root = exponents_from_orders(p, k, v);
  const mpz_class t = root.denominator_lcm();
  if (t == 1) throw Error(ErrorCode::AlreadyIntegral, "exponents " + root.to_string() + " are integral");
  std::vector<Rational> scaled(root.exponents().begin(), root.exponents().end());
  for (auto& r : scaled) r *= Rational(t);
  EtaQuotient lifted = GeneralizedEtaQuotient(p, std::move(scaled)).to_integral();
  const auto lifted_weight = weight(lifted);
  if (!lifted_weight) throw std::logic_error("lifted quotient has odd exponent sum");
  CuspOrders orders = cusp_orders(lifted);
  return LiftCertificate{std::move(root), t.get_si(), lifted, *lifted_weight, ghn_check(lifted),
                         classify(lifted), std::move(orders)};
}

EtaQuotient family_4p_quotient(std::int64_t p, std::int64_t k) {
  return EtaQuotient(4 * p, {{2 * p, -2 * k}, {4 * p, 4 * k}});
}

bool verify_4p_family(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  if (p > 2 && k % 2 != 0)
    throw Error(ErrorCode::OddWeight, "the level 4p family needs an even weight");
  const EtaQuotient e = family_4p_quotient(p, k);
  if (weight(e) != k || !ghn_check(e)) return false;
  for (std::int64_t d : e.divisors())
    if (cusp_order(e, d).sign() < 0) return false;
  const QuadChar chi = character_of(e);
  const std::int64_t expected = (p == 2 && k % 2 == 1) ? -1 : 1;
  return chi.discriminant_core() == expected;
}

SweepRow sweep_cell(std::int64_t p, std::int64_t k) {
  SweepRow row;
  row.p = p;
  row.k = k;
  const EnumerationReport report = enumerate_prime(p, k);
  row.count_cusp = report.cusp_count();
  row.count_noncusp = report.noncusp_count();
  std::vector<EtaQuotient> all = report.cusp;
  all.insert(all.end(), report.noncusp.begin(), report.noncusp.end());
  const IndependenceCertificate cert = independence_rank(all, k, p);
  row.rank = cert.rank;
  row.independent = cert.independent;
  try {
    const SpanRatio r = span_ratio(p, k);
    row.dim_cusp = r.dimension;
    row.ratio = r.ratio;
  } catch (const Error& e) {
    row.diagnostics.emplace_back(e.what());
  }
  for (const auto& e : report.scan_disagreements)
    row.diagnostics.push_back("scan disagreement: " + e.to_string());
  return row;
}

std::vector<SweepRow> sweep(std::int64_t pmax, std::int64_t kmax, unsigned threads) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t p = 5; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t k = 1; k <= kmax; ++k)
      if (weight_condition(p, k)) cells.emplace_back(p, k);
  }
  std::vector<SweepRow> rows(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = sweep_cell(cells[i].first, cells[i].second);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return rows;
}

}  // namespace etaq
