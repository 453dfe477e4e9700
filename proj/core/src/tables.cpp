#include "primechi/tables.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "primechi/character.hpp"
#include "primechi/errors.hpp"
#include "primechi/format.hpp"

namespace primechi {
namespace {

const char* kTableHeader = "index\tn\tre\tim";
const char* kAnomalyHeader = "kind\tn\tfield\tnote";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& where) {
  std::uint64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
    throw std::runtime_error(where + ": bad integer '" + s + "'");
  return v;
}

double parse_real(const std::string& s, const std::string& where) {
  auto v = parse_double(s);
  if (!v) throw std::runtime_error(where + ": bad real '" + s + "'");
  return *v;
}

std::string row_line(const TableRow& r, char sep) {
  std::string line = std::to_string(r.index);
  line += sep;
  line += std::to_string(r.n);
  line += sep;
  line += format_fixed10(r.re);
  line += sep;
  line += format_fixed10(r.im);
  return line;
}

}  // namespace

double default_tolerance(TableKind kind) {
  return kind == TableKind::Prime ? 5e-9 : 5e-8;
}

std::vector<TableRow> generate_prime_table(std::uint64_t count) {
  std::vector<TableRow> rows;
  rows.reserve(count);
  for (std::uint64_t m = 1; m <= count; ++m) {
    const CharacterEntry e = chi_prime(m);
    rows.push_back({TableKind::Prime, m, e.prime, e.chi.real(), e.chi.imag()});
  }
  return rows;
}

std::vector<TableRow> generate_composite_table(std::uint64_t limit) {
  std::vector<TableRow> rows;
  if (limit < 4) return rows;
  CharacterTable table(limit);
  std::uint64_t eta = 0;
  for (std::uint64_t n = 4; n <= limit; ++n) {
    if (table.is_prime_at(n)) continue;
    const std::complex<double> chi = table.chi(n);
    rows.push_back({TableKind::Composite, ++eta, n, chi.real(), chi.imag()});
  }
  return rows;
}

std::vector<TableRow> load_table_tsv(const std::string& path, TableKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_table_tsv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kTableHeader)
    throw std::runtime_error("load_table_tsv: " + path + ": expected header '" +
                             kTableHeader + "'");
  std::vector<TableRow> rows;
  std::uint64_t lineno = 1;
  std::uint64_t last_n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw std::runtime_error(where + ": expected 4 columns, got " +
                               std::to_string(fields.size()));
    TableRow r{kind, parse_u64(fields[0], where), parse_u64(fields[1], where),
               parse_real(fields[2], where), parse_real(fields[3], where)};
    if (r.n <= last_n)
      throw std::runtime_error(where + ": n not strictly ascending");
    last_n = r.n;
    rows.push_back(r);
  }
  return rows;
}

std::vector<Anomaly> load_anomalies_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_anomalies_tsv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kAnomalyHeader)
    throw std::runtime_error("load_anomalies_tsv: " + path + ": expected header '" +
                             kAnomalyHeader + "'");
  std::vector<Anomaly> out;
  std::uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw std::runtime_error(where + ": expected 4 columns, got " +
                               std::to_string(fields.size()));
    TableKind kind;
    if (fields[0] == "prime")
      kind = TableKind::Prime;
    else if (fields[0] == "composite")
      kind = TableKind::Composite;
    else
      throw std::runtime_error(where + ": kind must be prime|composite");
    if (fields[2].empty()) throw std::runtime_error(where + ": empty field column");
    out.push_back({kind, parse_u64(fields[1], where), fields[2], fields[3]});
  }
  return out;
}

DiffReport diff_tables(const std::vector<TableRow>& generated,
                       const std::vector<TableRow>& reference,
                       const std::vector<Anomaly>& anomalies, double tolerance) {
  if (!(tolerance > 0.0))
    throw std::domain_error("diff_tables: tolerance must be positive");
  std::map<std::uint64_t, const TableRow*> ref_by_n;
  for (const TableRow& r : reference) ref_by_n.emplace(r.n, &r);
  if (ref_by_n.size() != reference.size())
    throw VerificationError("diff_tables: duplicate n in reference");

  DiffReport report;
  report.tolerance = tolerance;
  std::map<std::pair<std::uint64_t, std::string>, bool> anomaly_keys;
  for (const Anomaly& a : anomalies) {
    if (!generated.empty() && a.kind != generated.front().kind) continue;
    anomaly_keys.emplace(std::pair{a.n, a.field}, true);
  }

  std::uint64_t matched = 0;
  for (const TableRow& g : generated) {
    const auto it = ref_by_n.find(g.n);
    if (it == ref_by_n.end())
      throw VerificationError("diff_tables: reference has no row for n=" +
                              std::to_string(g.n));
    const TableRow& r = *it->second;
    ++matched;
    // indexes are informational only: the source's composite numbering
    // repeats one eta, so rows are matched purely on n
    const std::pair<const char*, std::pair<double, double>> comps[2] = {
        {"re", {r.re, g.re}}, {"im", {r.im, g.im}}};
    for (const auto& [field, vals] : comps) {
      const double delta = std::abs(vals.first - vals.second);
      const bool known = anomaly_keys.count({g.n, field}) != 0;
      if (!known && delta > report.max_delta_excluding_anomalies)
        report.max_delta_excluding_anomalies = delta;
      if (delta >= tolerance)
        report.exceeding.push_back(
            {g.index, g.n, field, vals.first, vals.second, delta, known});
    }
  }
  if (matched != reference.size())
    throw VerificationError("diff_tables: generated covers " + std::to_string(matched) +
                            " of " + std::to_string(reference.size()) +
                            " reference rows");
  report.pass = report.max_delta_excluding_anomalies < tolerance;
  return report;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
  std::string out;
  if (format == TableFormat::Tsv || format == TableFormat::Csv) {
    const char sep = format == TableFormat::Tsv ? '\t' : ',';
    out = format == TableFormat::Tsv ? kTableHeader : "index,n,re,im";
    out += '\n';
    for (const TableRow& r : rows) {
      out += row_line(r, sep);
      out += '\n';
    }
    return out;
  }
  // json: array of row objects
  out = "[";
  bool first = true;
  for (const TableRow& r : rows) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"kind\": \"";
    out += r.kind == TableKind::Prime ? "prime" : "composite";
    out += "\", \"index\": " + std::to_string(r.index);
    out += ", \"n\": " + std::to_string(r.n);
    out += ", \"re\": " + format_fixed10(r.re);
    out += ", \"im\": " + format_fixed10(r.im);
    out += "}";
  }
  out += first ? "]\n" : "\n]\n";
  return out;
}

}  // namespace primechi
