#include "cli.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "etaq/dims.hpp"
#include "etaq/enumerate.hpp"
#include "etaq/error.hpp"
#include "etaq/eta_quotient.hpp"
#include "etaq/numthy.hpp"
#include "etaq/qseries.hpp"
#include "etaq/verify.hpp"
#include "json.hpp"

namespace etaq::cli {
namespace {

using nlohmann::json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Output {
  json params = json::object();
  json result = json::object();
  Table table;
  /// Replaces the table in text mode when non-empty.
  std::vector<std::string> text;
  std::vector<std::string> diagnostics;
  bool failed = false;
};

json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const Rational& r) { return r.to_string(); }

template <class T>
json to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json quotient_list(const std::vector<EtaQuotient>& qs) {
  json out = json::array();
  for (const auto& e : qs) out.push_back(e.to_string());
  return out;
}

std::string orders_text(const EtaQuotient& e) {
  const CuspOrders orders = cusp_orders(e);
  std::string out;
  for (const Rational& v : orders.orders()) {
    if (!out.empty()) out += ' ';
    out += v.to_string();
  }
  return out;
}

std::string decimal(const mpq_class& x) {
  const mpf_class f(x, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.6Fg", f.get_mpf_t());
  return buf;
}

std::string plain(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = plain(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string text_cell(const json& v) {
  static const std::regex fraction(R"(-?\d+/\d+)");
  std::string s = plain(v);
  if (v.is_string() && std::regex_match(s, fraction)) return decimal(mpq_class(s));
  return s.empty() ? "-" : s;
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_text(const Table& t, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(text_cell(v));
    cells.push_back(std::move(r));
  }
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (const auto& r : cells)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : cells) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += r[i];
      if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
    }
    out << line << '\n';
  }
}

Table key_value(const json& object) {
  Table t{{"field", "value"}, {}};
  for (const auto& [key, value] : object.items()) {
    t.rows.push_back({key, value.is_array() || value.is_object() ? json(value.dump()) : value});
  }
  return t;
}

unsigned worker_count(std::optional<unsigned> requested) {
  unsigned n = requested.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("ETAQ_THREADS")) {
    const long c = std::strtol(cap, nullptr, 10);
    if (c >= 1) n = std::min(n, static_cast<unsigned>(c));
  }
  return std::max(1u, n);
}

EnumerationReport enumerate_any(std::int64_t level, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "weight must be a positive integer");
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be a positive integer");
  if (level >= 5 && is_prime(level)) return enumerate_prime(level, k);
  return enumerate_squarefree(level, k);
}

void params_json(const PrimeLevelParams* p, json& out) {
  out["h"] = p ? json(p->h) : json(nullptr);
  out["d"] = p ? json(p->d) : json(nullptr);
  out["c"] = p ? json(p->c) : json(nullptr);
  out["L"] = p ? json(p->L) : json(nullptr);
}

Output cmd_enumerate(std::int64_t level, std::int64_t k) {
  Output o;
  o.params = {{"level", level}, {"weight", k}};
  const EnumerationReport r = enumerate_any(level, k);
  json& res = o.result;
  res["level"] = r.level;
  res["weight"] = r.weight;
  res["admissible"] = r.admissible;
  params_json(r.params ? &*r.params : nullptr, res);
  res["cusp"] = quotient_list(r.cusp);
  res["noncusp"] = quotient_list(r.noncusp);
  res["formula_count"] = to_json(r.formula_count);
  res["oracle_count"] = to_json(r.oracle_count);
  for (const auto& e : r.scan_disagreements) o.diagnostics.push_back("scan disagreement: " + e.to_string());
  if (!r.admissible) o.diagnostics.push_back("weight " + std::to_string(k) + " is not admissible");

  o.table.columns = {"kind", "quotient", "orders"};
  for (const auto& e : r.cusp) o.table.rows.push_back({"cusp", e.to_string(), orders_text(e)});
  for (const auto& e : r.noncusp) o.table.rows.push_back({"noncusp", e.to_string(), orders_text(e)});
  o.failed = !r.scan_disagreements.empty() ||
             (r.formula_count && *r.formula_count != r.cusp_count()) ||
             (r.oracle_count && *r.oracle_count != r.cusp_count());
  return o;
}

std::string series_text(const QSeries& s) {
  std::string out;
  const auto coeffs = s.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t n = s.leading_exponent() + static_cast<std::int64_t>(i);
    const mpz_class a = abs(c);
    std::string term;
    if (n == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + "*";
      term += n == 1 ? "q" : "q^" + std::to_string(n);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Output cmd_qexp(const std::string& text, std::int64_t level, std::int64_t terms) {
  Output o;
  o.params = {{"eta", text}, {"level", level}, {"terms", terms}};
  if (terms < 0) throw Error(ErrorCode::InvalidArgument, "terms must be nonnegative");
  const EtaQuotient e = EtaQuotient::parse(text, level);
  if (floor_mod(e.weighted_sum(), 24) != 0)
    throw Error(ErrorCode::FractionalLeadingPower,
                "sum delta r_delta = " + std::to_string(e.weighted_sum()) + " is not divisible by 24");
  const std::int64_t n0 = e.weighted_sum() / 24;
  const QSeries s = q_expansion(e, n0 + terms);
  json coeffs = json::array();
  for (std::int64_t n = n0; n < n0 + terms; ++n) coeffs.push_back(to_json(s.coefficient(n)));
  o.result = {{"n0", n0}, {"coeffs", coeffs}};
  o.table.columns = {"n", "coefficient"};
  for (std::int64_t n = n0; n < n0 + terms; ++n) o.table.rows.push_back({n, to_json(s.coefficient(n))});
  o.text.push_back(series_text(s));
  return o;
}

json report_json(const DimensionReport& r) {
  return {{"level", r.level},
          {"weight", r.weight},
          {"character", std::string(to_string(r.character))},
          {"dim_cusp", r.dim_cusp},
          {"dim_eisenstein", to_json(r.dim_eisenstein)},
          {"dim_total", to_json(r.dim_total)},
          {"source", std::string(to_string(r.source))}};
}

Output cmd_dims(std::int64_t level, std::int64_t k, const std::string& character) {
  Output o;
  o.params = {{"level", level}, {"weight", k}, {"character", character}};
  DimensionReport r;
  if (level == 1) {
    if (character != "trivial") throw Error(ErrorCode::InvalidArgument, "level 1 has only the trivial character");
    r = dim_level1(k);
  } else if (!is_prime(level)) {
    throw Error(ErrorCode::InvalidArgument, "dimensions are available for level 1 and prime levels only");
  } else if (character == "trivial") {
    r = dim_gamma0_p(level, k);
  } else {
    r = dim_quadratic(level, k);
  }
  o.result = report_json(r);
  o.table = key_value(o.result);
  return o;
}

Output cmd_count(std::int64_t p, std::int64_t k) {
  Output o;
  o.params = {{"prime", p}, {"weight", k}};
  if (!is_prime(p) || p < 5) throw Error(ErrorCode::InvalidArgument, "prime must be at least 5");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "weight must be a positive integer");
  json& res = o.result;
  res["p"] = p;
  res["k"] = k;
  const auto h = weight_condition(p, k);
  res["admissible"] = h.has_value();
  res["required_divisor"] = required_divisor(p);
  if (h) {
    const PrimeLevelParams pp = prime_params(p, k);
    params_json(&pp, res);
    const EnumerationReport r = enumerate_prime(p, k);
    res["formula_count"] = count_cusp_eta_unified(pp);
    res["three_case_count"] = count_cusp_eta_three_case(pp);
    res["walk_count"] = r.cusp_count();
    res["oracle_count"] = to_json(r.oracle_count);
    res["noncusp_count"] = r.noncusp_count();
    o.failed = res["formula_count"] != res["three_case_count"] || res["formula_count"] != res["walk_count"] ||
               res["formula_count"] != res["oracle_count"];
  } else {
    params_json(nullptr, res);
    for (const char* key : {"formula_count", "three_case_count", "walk_count", "oracle_count"}) res[key] = 0;
    res["noncusp_count"] = static_cast<std::int64_t>(noncusp_eta(p, k).size());
  }
  o.table = key_value(res);
  return o;
}

Output cmd_verify(std::int64_t level, std::int64_t k) {
  Output o;
  o.params = {{"level", level}, {"weight", k}};
  const EnumerationReport r = enumerate_any(level, k);
  std::vector<EtaQuotient> all = r.cusp;
  all.insert(all.end(), r.noncusp.begin(), r.noncusp.end());
  IndependenceCertificate c;
  c.level = level;
  c.weight = k;
  c.independent = true;
  c.distinct_leading_exponents = true;
  if (!all.empty()) c = independence_rank(all, k, level);
  o.result = {{"level", c.level},
              {"weight", c.weight},
              {"quotient_count", c.quotient_count},
              {"first_exponent", c.first_exponent},
              {"rows", c.rows},
              {"cols", c.cols},
              {"rank", c.rank},
              {"independent", c.independent},
              {"distinct_leading_exponents", c.distinct_leading_exponents}};
  o.table = key_value(o.result);
  if (all.empty()) o.diagnostics.push_back("no eta-quotients at this level and weight");
  o.failed = !c.independent;
  return o;
}

Output cmd_ratio(std::int64_t p, std::int64_t kmin, std::int64_t kmax) {
  Output o;
  o.params = {{"prime", p}, {"kmin", kmin}, {"kmax", kmax}};
  if (!is_prime(p) || p < 5) throw Error(ErrorCode::InvalidArgument, "prime must be at least 5");
  o.result["p"] = p;
  o.result["limit"] = to_json(span_ratio_limit(p));
  json rows = json::array();
  o.table.columns = {"k", "case", "cusp_count", "dimension", "ratio", "limit"};
  for (std::int64_t k = std::max<std::int64_t>(kmin, 1); k <= kmax; ++k) {
    if (!weight_condition(p, k)) continue;
    try {
      const SpanRatio s = span_ratio(p, k);
      rows.push_back({{"k", k},
                      {"case", std::string(to_string(s.ratio_case))},
                      {"cusp_count", s.cusp_count},
                      {"noncusp_count", s.noncusp_count},
                      {"dimension", s.dimension},
                      {"ratio", to_json(s.ratio)}});
      o.table.rows.push_back({k, std::string(to_string(s.ratio_case)), s.cusp_count, s.dimension,
                              to_json(s.ratio), to_json(s.limit)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TableInconsistency && e.code() != ErrorCode::ZeroDimension &&
          e.code() != ErrorCode::InvalidArgument)
        throw;
      o.diagnostics.push_back("k=" + std::to_string(k) + ": " + e.what());
    }
  }
  o.result["rows"] = rows;
  return o;
}

Output cmd_lift(std::int64_t p, std::int64_t k, std::int64_t v_inf) {
  Output o;
  o.params = {{"prime", p}, {"weight", k}, {"v1", v_inf}};
  if (!is_prime(p) || p < 5) throw Error(ErrorCode::InvalidArgument, "prime must be at least 5");
  const CuspOrders orders = prime_orders_from_infinity(p, k, v_inf);
  const LiftCertificate c = fractional_power_lift(p, k, orders);
  json divisors = json::array(), input = json::array(), root = json::array(), lifted = json::array();
  for (std::size_t i = 0; i < orders.divisors().size(); ++i) {
    divisors.push_back(orders.divisors()[i]);
    input.push_back(to_json(orders.orders()[i]));
    root.push_back(to_json(c.root.exponents()[i]));
    lifted.push_back(to_json(c.lifted_orders.orders()[i]));
  }
  o.result = {{"divisors", divisors},
              {"orders", input},
              {"root", root},
              {"power", c.power},
              {"lifted", c.lifted.to_string()},
              {"lifted_weight", c.lifted_weight},
              {"ghn", c.ghn},
              {"classification", std::string(to_string(c.classification))},
              {"lifted_orders", lifted}};
  o.table = key_value(o.result);
  o.failed = !c.ghn || (c.classification != Classification::ModularForm &&
                        c.classification != Classification::CuspForm);
  return o;
}

Output cmd_sweep(std::int64_t pmax, std::int64_t kmax, unsigned threads) {
  Output o;
  o.params = {{"pmax", pmax}, {"kmax", kmax}};
  const std::vector<SweepRow> rows = sweep(pmax, kmax, threads);
  o.table.columns = {"p", "k", "count_cusp", "count_noncusp", "dim_S", "ratio", "rank", "independent"};
  json out = json::array();
  for (const SweepRow& r : rows) {
    const json ratio = r.ratio ? to_json(*r.ratio) : json(nullptr);
    out.push_back({{"p", r.p},
                   {"k", r.k},
                   {"count_cusp", r.count_cusp},
                   {"count_noncusp", r.count_noncusp},
                   {"dim_S", to_json(r.dim_cusp)},
                   {"ratio", ratio},
                   {"rank", r.rank},
                   {"independent", r.independent}});
    o.table.rows.push_back({r.p, r.k, r.count_cusp, r.count_noncusp, to_json(r.dim_cusp), ratio, r.rank,
                            r.independent});
    for (const auto& d : r.diagnostics)
      o.diagnostics.push_back("p=" + std::to_string(r.p) + " k=" + std::to_string(r.k) + ": " + d);
    o.failed = o.failed || !r.independent;
  }
  o.result["rows"] = out;
  return o;
}

void emit(const std::string& command, const Output& o, const std::string& format, std::ostream& out,
          std::ostream& err) {
  if (format == "json") {
    json envelope = {{"command", command}, {"params", o.params}, {"result", o.result},
                     {"diagnostics", o.diagnostics}};
    out << envelope.dump(2) << '\n';
    return;
  }
  for (const auto& d : o.diagnostics) err << "note: " << d << '\n';
  if (format == "csv") {
    write_csv(o.table, out);
  } else if (!o.text.empty()) {
    for (const auto& line : o.text) out << line << '\n';
  } else {
    write_text(o.table, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and verify eta-quotients in spaces of modular forms", "etaq"};
  app.set_config("--config", "", "Read option defaults from a key=value file");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::int64_t level = 0, weight = 0, terms = 10, prime = 0, kmin = 1, kmax = 0, v1 = 0, pmax = 31;
  std::string eta, character = "trivial";
  std::optional<unsigned> threads;

  auto* enumerate = app.add_subcommand("enumerate", "List the eta-quotients of a given level and weight");
  enumerate->add_option("--level", level)->required();
  enumerate->add_option("--weight", weight)->required();

  auto* qexp = app.add_subcommand("qexp", "Expand an eta-quotient at infinity");
  qexp->add_option("--eta", eta, "Quotient as delta:r pairs, e.g. 1:-1,5:5")->required();
  qexp->add_option("--terms", terms, "Number of coefficients from the leading exponent");
  qexp->add_option("--level", level, "Level (default: lcm of the deltas)");

  auto* dims = app.add_subcommand("dims", "Dimensions of cusp and Eisenstein spaces");
  dims->add_option("--level", level)->required();
  dims->add_option("--weight", weight)->required();
  dims->add_option("--character", character)->check(CLI::IsMember({"trivial", "quadratic"}));

  auto* count = app.add_subcommand("count", "Cusp eta-quotient count at prime level");
  count->add_option("--prime", prime)->required();
  count->add_option("--weight", weight)->required();

  auto* verify = app.add_subcommand("verify", "Check linear independence of the enumerated quotients");
  verify->add_option("--level", level)->required();
  verify->add_option("--weight", weight)->required();

  auto* ratio = app.add_subcommand("ratio", "Eta-span ratio against the cusp space dimension");
  ratio->add_option("--prime", prime)->required();
  ratio->add_option("--kmin", kmin);
  ratio->add_option("--kmax", kmax)->required();

  auto* lift = app.add_subcommand("lift", "Raise a fractional eta-quotient to an integral power");
  lift->add_option("--prime", prime)->required();
  lift->add_option("--weight", weight)->required();
  lift->add_option("--v1", v1, "Order of vanishing at infinity")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Counts, dimensions and ranks over a (p, k) grid");
  sweep_cmd->add_option("--pmax", pmax);
  sweep_cmd->add_option("--kmax", kmax)->required();
  sweep_cmd->add_option("--threads", threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Output o;
    std::string command;
    if (*enumerate) {
      command = "enumerate";
      o = cmd_enumerate(level, weight);
    } else if (*qexp) {
      command = "qexp";
      o = cmd_qexp(eta, level, terms);
    } else if (*dims) {
      command = "dims";
      o = cmd_dims(level, weight, character);
    } else if (*count) {
      command = "count";
      o = cmd_count(prime, weight);
    } else if (*verify) {
      command = "verify";
      o = cmd_verify(level, weight);
    } else if (*ratio) {
      command = "ratio";
      o = cmd_ratio(prime, kmin, kmax);
    } else if (*lift) {
      command = "lift";
      o = cmd_lift(prime, weight, v1);
    } else {
      command = "sweep";
      o = cmd_sweep(pmax, kmax, worker_count(threads));
    }
    emit(command, o, format, out, err);
    return o.failed ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace etaq::cli
