#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primechi {

enum class TableKind { Prime, Composite };
enum class TableFormat { Tsv, Csv, Json };

// One table row.  For primes index is m and n is p_m; for composites index
// is the running composite count eta and n is the composite itself.
struct TableRow {
  TableKind kind;
  std::uint64_t index;
  std::uint64_t n;
  double re;
  double im;
};

// chi over the first `count` primes / over composites 4..limit.
std::vector<TableRow> generate_prime_table(std::uint64_t count);
std::vector<TableRow> generate_composite_table(std::uint64_t limit);

// A row of the bundled reference that is known to disagree with the formula
// (misprints in the source tables: copied digits, dropped digits, a flipped
// sign).  field is "re" or "im" for numeric flags; other fields (e.g. "eta")
// are documentation-only and never match a diff component.
struct Anomaly {
  TableKind kind;
  std::uint64_t n;
  std::string field;
  std::string note;
};

// TSV loaders for the bundled reference data.  Strict: exact column counts,
// from_chars-clean numerics, ascending unique n.
std::vector<TableRow> load_table_tsv(const std::string& path, TableKind kind);
std::vector<Anomaly> load_anomalies_tsv(const std::string& path);

// One component (re or im) of one row compared against the reference.
struct DiffEntry {
  std::uint64_t index;
  std::uint64_t n;
  std::string field;  // "re" or "im"
  double expected;    // reference value
  double computed;
  double delta;        // |expected - computed|
  bool known_anomaly;  // matched the anomaly list
};

struct DiffReport {
  double tolerance = 0.0;
  std::vector<DiffEntry> exceeding;  // every component with delta >= tolerance
  double max_delta_excluding_anomalies = 0.0;
  bool pass = false;  // max_delta_excluding_anomalies < tolerance
};

// Keyed on n; indexes are informational only (the reference's composite
// numbering stutters once).  Generated and reference must cover the same n
// set; any structural mismatch is an error naming the first offending n,
// not a report.
DiffReport diff_tables(const std::vector<TableRow>& generated,
                       const std::vector<TableRow>& reference,
                       const std::vector<Anomaly>& anomalies, double tolerance);

// Render with a header line; reals fixed at 10 decimals, round half to even.
// Tsv/Csv: index, n, re, im.  Json: array of {kind, index, n, re, im}.
std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

double default_tolerance(TableKind kind);  // prime 5e-9, composite 5e-8

}  // namespace primechi
