// primechi: prime-indexed unit characters, their series diagnostics, the
// reference tables, and the Basel appendix checks, behind one binary.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primechi/basel.hpp"
#include "primechi/character.hpp"
#include "primechi/errors.hpp"
#include "primechi/format.hpp"
#include "primechi/primes.hpp"
#include "primechi/series.hpp"
#include "primechi/tables.hpp"

namespace {

namespace fs = std::filesystem;
using namespace primechi;

// --data-dir flag beats PRIMECHI_DATA_DIR, which beats the installed
// share/ directory next to the binary, which beats ./data.
std::string resolve_data_dir(const std::string& flag_value, const char* argv0) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PRIMECHI_DATA_DIR"); env && *env) return env;
  std::error_code ec;
  const fs::path exe = fs::weakly_canonical(fs::path(argv0), ec);
  if (!ec && exe.has_parent_path()) {
    const fs::path share = exe.parent_path().parent_path() / "share/primechi/data";
    if (fs::exists(share / "prime_table.tsv", ec)) return share.string();
  }
  return "data";
}

SeriesPoint parse_s_flags(const std::string& s_text, bool have_critical,
                          double critical_t) {
  if (have_critical) return SeriesPoint::critical(critical_t);
  if (s_text.empty()) return {0.5, 14.134725};
  const auto parsed = parse_complex_pair(s_text);
  if (!parsed)
    throw CLI::ValidationError("--s", "expected RE,IM decimal pair, got '" + s_text + "'");
  return {parsed->real(), parsed->imag()};
}

TableFormat parse_format(const std::string& name) {
  if (name == "tsv") return TableFormat::Tsv;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw CLI::ValidationError("--format", "must be tsv, csv or json");
}

int run_diff(std::ostream& out, const std::string& data_dir, TableKind kind,
             double tol) {
  const bool prime = kind == TableKind::Prime;
  const std::string table_file =
      data_dir + (prime ? "/prime_table.tsv" : "/composite_table.tsv");
  const auto reference = load_table_tsv(table_file, kind);
  const auto anomalies = load_anomalies_tsv(data_dir + "/anomalies.tsv");
  const auto generated = prime
                             ? generate_prime_table(reference.size())
                             : generate_composite_table(reference.back().n);
  const DiffReport report = diff_tables(generated, reference, anomalies, tol);
  std::uint64_t known = 0;
  for (const DiffEntry& e : report.exceeding) {
    out << (e.known_anomaly ? "known anomaly" : "MISMATCH") << " n=" << e.n << ' '
        << e.field << " reference=" << format_fixed10(e.expected)
        << " computed=" << format_fixed10(e.computed)
        << " delta=" << format_fixed10(e.delta) << '\n';
    if (e.known_anomaly) ++known;
  }
  out << report.exceeding.size() << " component(s) at or above tolerance, " << known
      << " known anomalies\n";
  out << "max delta excluding anomalies " << format_fixed10(report.max_delta_excluding_anomalies)
      << " vs tolerance " << format_fixed10(report.tolerance) << ": "
      << (report.pass ? "PASS" : "FAIL") << '\n';
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime-indexed unit characters: tables, series diagnostics, Basel checks"};
  app.require_subcommand(1);
  // subcommands inherit this: --data-dir / --output may follow the subcommand
  app.fallthrough();

  std::string data_dir_flag;
  std::string output_path;
  app.add_option("--data-dir", data_dir_flag,
                 "directory with the bundled reference tables");
  app.add_option("--output", output_path, "write payload to this file instead of stdout");

  std::string s_text;
  double critical_t = 0.0;
  bool have_critical = false;

  auto add_s_flags = [&](CLI::App* cmd) {
    cmd->add_option("--s", s_text, "evaluation point as RE,IM (default 0.5,14.134725)");
    cmd->add_option("--critical", critical_t, "shorthand for --s 0.5,T")
        ->each([&](const std::string&) { have_critical = true; })
        ->excludes("--s");
  };

  // chi <n>
  std::uint64_t chi_n = 0;
  CLI::App* cmd_chi = app.add_subcommand("chi", "print chi(n) at 10 decimals");
  cmd_chi->add_option("n", chi_n, "argument n >= 1")->required();

  // primes --count M
  std::uint64_t primes_count = 0;
  CLI::App* cmd_primes = app.add_subcommand("primes", "print the first M primes");
  cmd_primes->add_option("--count", primes_count, "how many primes")->required();

  // table primes|composites
  std::string table_which;
  std::uint64_t table_count = 180;
  std::uint64_t table_limit = 121;
  std::string format_name = "tsv";
  CLI::App* cmd_table = app.add_subcommand("table", "emit a character table");
  cmd_table->add_option("which", table_which, "primes|composites")
      ->required()
      ->check(CLI::IsMember({"primes", "composites"}));
  cmd_table->add_option("--count", table_count, "prime rows (table primes, default 180)");
  cmd_table->add_option("--limit", table_limit,
                        "largest composite (table composites, default 121)");
  cmd_table->add_option("--format", format_name, "tsv|csv|json (default tsv)");

  // diff primes|composites
  std::string diff_which;
  double diff_tol = 0.0;
  CLI::App* cmd_diff = app.add_subcommand("diff", "diff regenerated table vs bundled reference");
  cmd_diff->add_option("which", diff_which, "primes|composites")
      ->required()
      ->check(CLI::IsMember({"primes", "composites"}));
  cmd_diff->add_option("--tol", diff_tol, "override per-table default tolerance");

  // series <variant>
  std::string series_which;
  std::uint64_t series_depth = 0;
  std::uint32_t series_mu = 2;
  int refchar_modulus = 4;
  std::uint64_t refchar_factors = 1000;
  CLI::App* cmd_series = app.add_subcommand("series", "emit PartialSumReport rows as CSV");
  cmd_series->add_option("which", series_which,
                         "omega-inner|omega|L|lambda|euler|loglemma|group3|corollary|refchar")
      ->required()
      ->check(CLI::IsMember({"omega-inner", "omega", "L", "lambda", "euler", "loglemma",
                             "group3", "corollary", "refchar"}));
  cmd_series->add_option("--depth", series_depth,
                         "truncation depth N/M/K (default 1000; loglemma 40)");
  cmd_series->add_option("--mu", series_mu, "expansion order for group3 (default 2)");
  cmd_series->add_option("--modulus", refchar_modulus, "refchar modulus, 3 or 4");
  cmd_series->add_option("--factors", refchar_factors,
                         "refchar Euler factors M (default 1000)");
  add_s_flags(cmd_series);

  // basel <variant>
  std::string basel_which;
  std::uint64_t basel_depth = 0;
  double basel_x = std::numbers::pi / 2.0;
  CLI::App* cmd_basel = app.add_subcommand("basel", "appendix checks");
  cmd_basel->add_option("which", basel_which, "sum|product|coeff|demo")
      ->required()
      ->check(CLI::IsMember({"sum", "product", "coeff", "demo"}));
  cmd_basel->add_option("--depth", basel_depth,
                        "terms/factors/roots (defaults: sum 1e6, product 1e4, coeff 3, demo 1e3)");
  cmd_basel->add_option("--x", basel_x, "sample point for basel product (default pi/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "cannot open --output file " << output_path << '\n';
      return 1;
    }
    out = &file_out;
  }

  try {
    const std::string data_dir = resolve_data_dir(data_dir_flag, argv[0]);

    if (*cmd_chi) {
      *out << format_complex10(chi_of(chi_n)) << '\n';
      return 0;
    }

    if (*cmd_primes) {
      if (primes_count == 0) throw std::domain_error("primes: --count must be >= 1");
      *out << "m\tp\n";
      for (std::uint64_t m = 1; m <= primes_count; ++m)
        *out << m << '\t' << nth_prime(m).value << '\n';
      return 0;
    }

    if (*cmd_table) {
      const auto rows = table_which == "primes" ? generate_prime_table(table_count)
                                                : generate_composite_table(table_limit);
      *out << render_table(rows, parse_format(format_name));
      return 0;
    }

    if (*cmd_diff) {
      const TableKind kind =
          diff_which == "primes" ? TableKind::Prime : TableKind::Composite;
      const double tol = diff_tol > 0.0 ? diff_tol : default_tolerance(kind);
      return run_diff(*out, data_dir, kind, tol);
    }

    if (*cmd_series) {
      const SeriesPoint s = parse_s_flags(s_text, have_critical, critical_t);
      std::vector<PartialSumReport> rows;
      if (series_which == "loglemma") {
        const std::uint64_t K = series_depth ? series_depth : 40;
        const std::complex<double> z =
            s_text.empty() && !have_critical ? std::complex<double>{0.5, 0.0}
                                             : std::complex<double>{s.sigma, s.t};
        rows.push_back(log_expansion_report(z, static_cast<std::uint32_t>(K)));
      } else if (series_which == "refchar") {
        const std::uint64_t N = series_depth ? series_depth : 1000;
        const auto r = reference_character_L(refchar_modulus, s, N, refchar_factors);
        rows.push_back({N, r.series, r.product, r.residual});
      } else {
        const std::uint64_t N = series_depth ? series_depth : 1000;
        if (series_which == "omega-inner") {
          rows = omega_inner_rows(N);
        } else if (series_which == "omega") {
          rows.push_back(omega_fixed_partial(s, N));
        } else if (series_which == "L") {
          const std::complex<double> L = dirichlet_partial(s, N);
          rows.push_back({N, L, {0.0, 0.0}, std::abs(L)});
        } else if (series_which == "lambda") {
          rows.push_back(lambda_fixed_partial(s, N));
        } else if (series_which == "euler") {
          const std::complex<double> prod = euler_product_partial(s, N);
          const std::complex<double> ref = dirichlet_partial(s, nth_prime(N).value);
          rows.push_back({N, prod, ref, std::abs(prod - ref)});
        } else if (series_which == "group3") {
          rows.push_back(power_sum_residual(s, series_mu, N));
        } else {  // corollary
          const CorollaryReport rep = corollary_report(s, N);
          rows = {rep.omega, rep.dirichlet, rep.lambda};
        }
      }
      write_reports_csv(*out, rows);
      return 0;
    }

    if (*cmd_basel) {
      if (basel_which == "sum") {
        *out << format_fixed10(basel_partial(basel_depth ? basel_depth : 1000000)) << '\n';
      } else if (basel_which == "product") {
        *out << format_fixed10(sin_product_partial(basel_x, basel_depth ? basel_depth : 10000))
             << '\n';
      } else if (basel_which == "coeff") {
        const std::uint64_t n = basel_depth ? basel_depth : 3;
        RootSet set;
        for (std::uint64_t k = 1; k <= n; ++k)
          set.roots.push_back(static_cast<double>(k) * std::numbers::pi);
        *out << format_fixed10(coefficient_identity_check(set)) << '\n';
      } else {  // demo
        const SincDemoReport rep = sin_series_root_demo(basel_depth ? basel_depth : 1000);
        *out << "x\tseries\tproduct\treference\n";
        for (const SincSample& smp : rep.samples)
          *out << format_fixed10(smp.x) << '\t' << format_fixed10(smp.series) << '\t'
               << format_fixed10(smp.product) << '\t' << format_fixed10(smp.reference)
               << '\n';
      }
      return 0;
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;  // unreachable: a subcommand is required
}
