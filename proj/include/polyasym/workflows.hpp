#pragma once

#include "polyasym/coeff_asymptotics.hpp"
#include "polyasym/euler_sums.hpp"
#include "polyasym/integral_expansion.hpp"
#include "polyasym/polylog.hpp"
#include "polyasym/verification.hpp"

#include <json.hpp>

#include <future>
#include <sstream>
#include <string>
#include <vector>

namespace polyasym {

/// A rectangular table of already-rendered cells; the CSV and JSON emitters
/// both read these strings, so the two encodings carry identical numerics.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline void csv_field(std::ostringstream& out, const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char ch : field) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

}  // namespace detail

inline std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out << ',';
    detail::csv_field(out, t.header[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      detail::csv_field(out, row[i]);
    }
    out << '\n';
  }
  return out.str();
}

inline std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i) {
      obj[t.header[i]] = row[i];
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

inline Table records_table(const std::vector<VerificationRecord>& records) {
  Table t;
  t.header = {"name", "computed", "reference", "abs_diff", "tolerance", "pass"};
  for (const auto& r : records) {
    t.rows.push_back({r.name, to_decimal(r.computed), to_decimal(r.reference),
                      to_decimal(r.abs_diff), to_decimal(r.tolerance),
                      r.pass ? "true" : "false"});
  }
  return t;
}

namespace workflows {

/// Corollary integrals, quadrature vs closed form.
inline std::vector<VerificationRecord> corollary(const ExtReal& quad_tol, const ExtReal& row_tol) {
  ensure_thread_precision();
  return corollary_table(quad_tol, row_tol);
}

/// The alternating Euler sums against the averaged direct-summation oracle.
inline std::vector<VerificationRecord> euler_sums(long N, int levels, const ExtReal& tol) {
  ensure_thread_precision();
  std::vector<VerificationRecord> out;
  out.push_back(make_record("S[1,2] vs oracle", s_pm_linear(2),
                            s_pm_direct(1, 2, EulerSumKind::linear, N, levels).value, tol));
  out.push_back(make_record("S[1,4] vs oracle", s_pm_linear(4),
                            s_pm_direct(1, 4, EulerSumKind::linear, N, levels).value, tol));
  out.push_back(make_record("S[1,3] (mu1) vs oracle", s13_mu1(),
                            s_pm_direct(1, 3, EulerSumKind::linear, N, levels).value, tol));
  out.push_back(make_record("S[2,3] vs oracle", s_pm_general(2, 3),
                            s_pm_direct(2, 3, EulerSumKind::linear, N, levels).value, tol));
  out.push_back(make_record("T3 vs oracle", t3_quadratic(),
                            -s_pm_direct(1, 3, EulerSumKind::quadratic, N, levels).value, tol));
  const ConstantTable& c = constants();
  out.push_back(make_record("S[1,1] vs zeta(2)/2 - ln(2)^2/2",
                            s_pm_direct(1, 1, EulerSumKind::linear, N, levels).value,
                            c.zeta(2) / 2 - c.ln2 * c.ln2 / 2, tol));
  return out;
}

/// Assembly identities for the 1/n^4 and 1/n^5 coefficients.
inline std::vector<VerificationRecord> assembly(const ExtReal& tol) {
  ensure_thread_precision();
  return assembly_identities(tol);
}

/// Machine-derived D-table against the printed m = 3 values, plus the m = 4
/// structural facts.
inline std::vector<VerificationRecord> d_table(const ExtReal& tol) {
  ensure_thread_precision();
  const ConstantTable& c = constants();
  const ExtReal z3 = c.zeta(3);
  const ExtReal p2 = c.pi * c.pi, p4 = pow(c.pi, 4), p6 = pow(c.pi, 6), p8 = pow(c.pi, 8);
  const auto D = derive_D(3, 6);
  std::vector<VerificationRecord> out;
  out.push_back(make_record("m=3 D(-1,0)", d_coeff(D, -1, 0), 6 * z3 / p2, tol));
  out.push_back(make_record("m=3 D(0,0)", d_coeff(D, 0, 0),
                            z3 * (-24 * p6 + 216 * p4) / (8 * p8), tol));
  out.push_back(make_record("m=3 D(0,1)", d_coeff(D, 0, 1), 18 * z3 / p4, tol));
  out.push_back(make_record("m=3 D(1,1)", d_coeff(D, 1, 1), 162 * z3 / p6, tol));
  out.push_back(make_record("m=3 D(1,2)", d_coeff(D, 1, 2), 54 * z3 / p6, tol));
  out.push_back(make_record("m=3 D(2,3)", d_coeff(D, 2, 3), 162 * z3 / p8, tol));
  out.push_back(make_record("m=3 D(2,2)", d_coeff(D, 2, 2), 27 * z3 * (27 + p2) / p8, tol));
  out.push_back(make_record("m=3 D(2,1)", d_coeff(D, 2, 1),
                            ExtReal(9) / 2 * z3 * (10 * p2 + 243) / p8, tol));
  const auto D4 = derive_D(4, 6);
  out.push_back(make_record("m=4 D(-1,0)", d_coeff(D4, -1, 0), c.zeta(4) / z3, tol));
  out.push_back(make_record("m=4 D(0,1) vanishes", d_coeff(D4, 0, 1), ExtReal(0), tol));
  return out;
}

/// End-to-end: exact coefficients against the assembled truncations for
/// m = 3 and m = 4, and the m = 6 leading terms.
inline std::vector<VerificationRecord> endpoints(const ExtReal& coeff_tol) {
  ensure_thread_precision();
  const ConstantTable& c = constants();
  const ExtReal z3 = c.zeta(3), z5 = c.zeta(5);
  std::vector<VerificationRecord> out;

  const auto rows3 = compare_table(3, {100}, 3);
  out.push_back(make_record("m=3 C(n,0) = 6 zeta(3)/pi^2", rows3[0].c[0],
                            6 * z3 / (c.pi * c.pi), coeff_tol));
  out.push_back(make_record("m=3 S_100 anchor 0.7329", rows3[0].exact, ExtReal("0.7329"),
                            pow10(-4)));

  const auto r4 = asym_Sn(4, 3);
  out.push_back(make_record("m=4 constant term", r4.T.coeff(0, 0), pow(c.pi, 4) / (90 * z3),
                            coeff_tol));
  out.push_back(make_record("m=4 1/n^2 coefficient", r4.T.coeff(0, 2),
                            pow(c.pi, 4) / (540 * z3 * z3), coeff_tol));
  out.push_back(make_record("m=4 1/n^3 coefficient", r4.T.coeff(0, 3),
                            -pow(c.pi, 6) / (1620 * z3 * z3 * z3), coeff_tol));

  const auto r6 = asym_Sn(6, 4);
  out.push_back(make_record("m=6 constant term", r6.T.coeff(0, 0), pow(c.pi, 6) / (945 * z5),
                            pow10(-40)));
  out.push_back(make_record("m=6 1/n^4 coefficient", r6.T.coeff(0, 4),
                            pow(c.pi, 6) / (18900 * z5 * z5), pow10(-40)));

  const auto rows4 = compare_table(4, {50, 100}, 0);
  const ExtReal ratio = abs(rows4[0].residual[0]) / abs(rows4[1].residual[0]);
  out.push_back(make_record("m=4 residual ratio n=50/n=100 in [3.4,4.6]", ratio, ExtReal(4),
                            ExtReal(3) / 5));
  return out;
}

struct VerifyAllResult {
  std::vector<VerificationRecord> records;
  bool all_pass = true;
};

/// The full verification surface; sections run concurrently, assembly order
/// is fixed. Exit gate of the command-line tool.
inline VerifyAllResult verify_all(const ExtReal& quad_tol = pow10(-45),
                                  const ExtReal& corollary_row_tol = pow10(-40),
                                  long oracle_terms = 100000) {
  ensure_thread_precision();
  constants();  // shared table built once before the sections fork
  auto fut_corollary = std::async(std::launch::async, [&] { return corollary(quad_tol, corollary_row_tol); });
  auto fut_euler = std::async(std::launch::async, [&] { return euler_sums(oracle_terms, 6, pow10(-10)); });
  auto fut_assembly = std::async(std::launch::async, [] { return assembly(pow10(-50)); });
  auto fut_dtable = std::async(std::launch::async, [] { return d_table(pow10(-50)); });
  auto fut_endpoints = std::async(std::launch::async, [] { return endpoints(pow10(-50)); });

  VerifyAllResult result;
  for (auto* fut : {&fut_corollary, &fut_euler, &fut_assembly, &fut_dtable, &fut_endpoints}) {
    for (auto& r : fut->get()) result.records.push_back(std::move(r));
  }
  result.all_pass = all_pass(result.records);
  return result;
}

}  // namespace workflows

/// Emitted tables for the CLI subcommands.

inline Table constants_dump() {
  ensure_thread_precision();
  const ConstantTable& c = constants();
  Table t;
  t.header = {"name", "value"};
  t.rows.push_back({"pi", to_decimal(c.pi)});
  t.rows.push_back({"gamma", to_decimal(c.gamma)});
  t.rows.push_back({"ln2", to_decimal(c.ln2)});
  for (int s = ConstantTable::kZetaMin; s <= ConstantTable::kZetaMax; ++s) {
    if (s == 1) continue;
    t.rows.push_back({"zeta(" + std::to_string(s) + ")", to_decimal(c.zeta(s))});
  }
  for (int s = 1; s <= 9; ++s) {
    t.rows.push_back({"eta(" + std::to_string(s) + ")", to_decimal(c.eta(s))});
  }
  for (int m = 2; m <= 6; ++m) {
    t.rows.push_back({"li_half(" + std::to_string(m) + ")", to_decimal(c.li_half(m))});
  }
  return t;
}

inline Table residual_table_rows(const std::vector<long>& ns, const ExtReal& tol) {
  const auto rows = residual_table(ns, tol);
  Table t;
  t.header = {"n", "I_n", "I_n_0", "I_n_2", "I_n_3", "I_n_4", "I_n_5",
              "scaled_resid_k0", "scaled_resid_k2", "scaled_resid_k3",
              "scaled_resid_k4", "scaled_resid_k5"};
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.n), to_decimal(r.value)};
    for (const auto& p : r.partial) row.push_back(to_decimal(p));
    for (const auto& s : r.scaled) row.push_back(to_decimal(s));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table compare_table_rows(int m, const std::vector<long>& ns, int k_max) {
  const auto rows = compare_table(m, ns, k_max);
  Table t;
  t.header = {"n", "exact_S_n"};
  for (int k = 0; k <= k_max; ++k) t.header.push_back("C_n_" + std::to_string(k));
  for (int k = 0; k <= k_max; ++k) t.header.push_back("resid_" + std::to_string(k));
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.n), to_decimal(r.exact)};
    for (const auto& v : r.c) row.push_back(to_decimal(v));
    for (const auto& v : r.residual) row.push_back(to_decimal(v));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table derive_table_rows(int m, int eps_order, int t_order) {
  Table t;
  t.header = {"table", "index1", "index2", "coefficient", "paper_verified"};
  const auto D = derive_D(m, eps_order);
  for (const auto& [key, v] : D) {
    t.rows.push_back({"D", std::to_string(key.first), std::to_string(key.second), to_decimal(v),
                      (m == 3 && key.first <= 2) ? "yes" : "no"});
  }
  const auto pipeline = asym_Sn(m, t_order);
  auto t_verified = [m](int b) {
    if (m == 3 || m == 4) return b <= 3;
    if (m == 6) return b == 0 || b == 4;
    return false;
  };
  for (const auto& [key, v] : pipeline.T.terms()) {
    // key = (log power a, inverse power b); emitted as (b, a, coefficient)
    t.rows.push_back({"T", std::to_string(key.second), std::to_string(key.first), to_decimal(v),
                      t_verified(key.second) ? "yes" : "no"});
  }
  return t;
}

inline Table polylog_expansion_rows(int m, int w_order) {
  const SingularExpansion e = li_singular_expansion(m, w_order);
  Table t;
  t.header = {"w_power", "log_power", "coefficient"};
  for (const auto& [key, v] : e.terms.terms()) {
    t.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_decimal(v)});
  }
  return t;
}

inline Table eulersum_rows(int p, int q, EulerSumKind kind, long N) {
  ensure_thread_precision();
  ExtReal closed;
  std::string name;
  if (kind == EulerSumKind::quadratic) {
    if (q != 3 || p != 1) {
      throw std::invalid_argument("quadratic closed form available for p=1, q=3 only");
    }
    closed = -t3_quadratic();  // oracle sums (-1)^(k-1) H_k^2/k^3
    name = "sum (-1)^(k-1) H_k^2/k^3";
  } else if (p == 1) {
    if (q == 3) {
      closed = s13_mu1();
    } else {
      closed = s_pm_linear(q);
    }
    name = "S[1," + std::to_string(q) + "]";
  } else {
    closed = s_pm_general(p, q);
    name = "S[" + std::to_string(p) + "," + std::to_string(q) + "]";
  }
  const OracleResult o = s_pm_direct(p, q, kind, N);
  Table t;
  t.header = {"name", "closed_form", "oracle", "abs_diff", "oracle_terms"};
  t.rows.push_back({name, to_decimal(closed), to_decimal(o.value), to_decimal(abs(closed - o.value)),
                    std::to_string(o.terms)});
  return t;
}

}  // namespace polyasym
