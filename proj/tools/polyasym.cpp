#include "polyasym/workflows.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace polyasym;

struct RunConfig {
  int precision_digits = 60;
  std::string format = "csv";
  std::string output_path;  // empty: stdout
};

int emit(const RunConfig& cfg, const Table& table) {
  const std::string body = (cfg.format == "json") ? to_json(table) : to_csv(table);
  if (cfg.output_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << cfg.output_path << "\n";
    return 2;
  }
  out << body;
  if (!out.good()) {
    std::cerr << "error: short write to " << cfg.output_path << "\n";
    return 2;
  }
  return 0;
}

std::vector<long> parse_n_list(const std::string& csv) {
  std::vector<long> ns;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? csv.npos : comma - pos);
    if (!tok.empty()) ns.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ns.empty()) throw CLI::ValidationError("--n-list", "expected a comma-separated list of n");
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polyasym: high-precision evaluation and cross-verification of the "
      "asymptotics of I(n) = int_0^1 [x^n+(1-x)^n]^(1/n) dx and of the "
      "coefficients [z^n] Li_m(1)/(Li_m(1)-Li_m(z))."};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision_digits,
                 "working precision in decimal digits (>= 30)")
      ->envname("POLYASYM_PRECISION")
      ->check(CLI::Range(30, 10000));
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.output_path, "write the table to a file instead of stdout");

  auto* cmd_constants = app.add_subcommand("constants", "dump the shared constant table");

  int pl_m = 3;
  std::string pl_z;
  int pl_order = 0;
  auto* cmd_polylog = app.add_subcommand("polylog", "evaluate Li_m or its expansion at z = 1");
  cmd_polylog->add_option("--m", pl_m, "weight m >= 2")->required();
  cmd_polylog->add_option("--z", pl_z, "evaluation point in [0,1] (decimal string)");
  cmd_polylog->add_option("--expansion-order", pl_order,
                          "emit the singular expansion to this w-order instead of a value");

  int es_p = 1, es_q = 2;
  std::string es_kind = "linear";
  long es_direct = 100000;
  auto* cmd_eulersum = app.add_subcommand("eulersum", "closed form vs direct-summation oracle");
  cmd_eulersum->add_option("--p", es_p, "harmonic-number order p");
  cmd_eulersum->add_option("--q", es_q, "denominator power q")->required();
  cmd_eulersum->add_option("--kind", es_kind, "sum family")
      ->check(CLI::IsMember({"linear", "quadratic"}));
  cmd_eulersum->add_option("--direct", es_direct, "oracle term budget N");

  std::string in_list = "50,100,200,400";
  std::string in_tol = "1e-30";
  auto* cmd_integral = app.add_subcommand("integral", "I(n), partial sums, scaled residuals");
  cmd_integral->add_option("--n-list", in_list, "comma-separated n values");
  cmd_integral->add_option("--tol", in_tol, "quadrature tolerance");

  std::string co_tol = "1e-45";
  auto* cmd_corollary =
      app.add_subcommand("corollary", "closed-form integral table, quadrature vs reference");
  cmd_corollary->add_option("--tol", co_tol, "quadrature tolerance (rows pass at 1e5 x this)");

  int cf_m = 3, cf_nmax = 100, cf_kmax = 3;
  auto* cmd_coeffs = app.add_subcommand("coeffs", "exact S_n against the truncations C_{n,k}");
  cmd_coeffs->add_option("--m", cf_m, "weight m in {3,4,6}")->check(CLI::IsMember({3, 4, 6}));
  cmd_coeffs->add_option("--n-max", cf_nmax, "largest n");
  cmd_coeffs->add_option("--k-max", cf_kmax, "deepest truncation order")->check(CLI::Range(0, 5));

  int dv_m = 3, dv_eps = 6, dv_ord = 5;
  auto* cmd_derive = app.add_subcommand("derive", "machine-derived D-table and T-expansion");
  cmd_derive->add_option("--m", dv_m, "weight m in {3,4,6}")->check(CLI::IsMember({3, 4, 6}));
  cmd_derive->add_option("--eps-order", dv_eps, "eps truncation order")->check(CLI::Range(3, 10));
  cmd_derive->add_option("--t-order", dv_ord, "asymptotic order of the emitted T")
      ->check(CLI::Range(1, 5));

  std::string va_tol = "1e-45";
  auto* cmd_verify = app.add_subcommand("verify-all", "run every verification record");
  cmd_verify->add_option("--tol", va_tol, "corollary quadrature tolerance");

  for (auto* sub : {cmd_constants, cmd_polylog, cmd_eulersum, cmd_integral, cmd_corollary,
                    cmd_coeffs, cmd_derive, cmd_verify}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    set_working_precision(cfg.precision_digits);

    if (*cmd_constants) {
      return emit(cfg, constants_dump());
    }
    if (*cmd_polylog) {
      if (pl_order > 0) {
        return emit(cfg, polylog_expansion_rows(pl_m, pl_order));
      }
      if (pl_z.empty()) {
        std::cerr << "error: polylog needs --z or --expansion-order\n";
        return 2;
      }
      Table t;
      t.header = {"m", "z", "value"};
      t.rows.push_back({std::to_string(pl_m), pl_z, to_decimal(li_eval(pl_m, ExtReal(pl_z)))});
      return emit(cfg, t);
    }
    if (*cmd_eulersum) {
      const EulerSumKind kind =
          (es_kind == "quadratic") ? EulerSumKind::quadratic : EulerSumKind::linear;
      return emit(cfg, eulersum_rows(es_p, es_q, kind, es_direct));
    }
    if (*cmd_integral) {
      return emit(cfg, residual_table_rows(parse_n_list(in_list), ExtReal(in_tol)));
    }
    if (*cmd_corollary) {
      const ExtReal qtol(co_tol);
      return emit(cfg, records_table(corollary_table(qtol, qtol * 100000)));
    }
    if (*cmd_coeffs) {
      std::vector<long> ns;
      for (long n = 1; n <= cf_nmax; ++n) ns.push_back(n);
      return emit(cfg, compare_table_rows(cf_m, ns, cf_kmax));
    }
    if (*cmd_derive) {
      return emit(cfg, derive_table_rows(dv_m, dv_eps, dv_ord));
    }
    if (*cmd_verify) {
      const auto result = workflows::verify_all(ExtReal(va_tol));
      const int rc = emit(cfg, records_table(result.records));
      if (rc != 0) return rc;
      if (!result.all_pass) {
        std::cerr << "verify-all: at least one record failed\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
