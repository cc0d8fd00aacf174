#pragma once

// Table emission in the reference text layout or JSON, golden-file parsing
// and the regression harness.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet/engine.hpp"

namespace dirichlet {

enum class TableKind { Chars, L, Lprime, S, P, Zeta, A, Q, F, C };

std::string kind_name(TableKind k);
std::optional<TableKind> parse_kind(const std::string& name);
/// L, Lprime and S rows carry a complex value and are indexed by character.
bool is_complex_kind(TableKind k);
bool is_constant_kind(TableKind k);
/// Default s range of the reference listings.
std::pair<long, long> default_s_range(TableKind k);

enum class OutputFormat { Paper, Json };

struct EmitOptions {
  TableKind kind = TableKind::L;
  std::vector<int> moduli;
  std::optional<long> smin;
  std::optional<long> smax;
  OutputFormat format = OutputFormat::Paper;
  /// Replace duplicate and conjugate blocks by one-line placeholders.
  bool fillers = false;
  int jobs = 1;
};

/// Deterministic text; throws UsageError on unsupported kind/range combinations.
std::string emit_table(Engine& engine, const EmitOptions& opts);

struct GoldenRecord {
  TableKind kind = TableKind::L;
  int m = 0;
  /// r for character-indexed kinds, n for class-indexed kinds.
  int index = 0;
  bool star = false;
  long s = 0;
  std::string re;
  std::string im;
  /// chars only: symbols for chi(1)..chi(m) and the conductor.
  std::vector<std::string> symbols;
  int conductor = 0;
  int line = 0;

  std::string label() const;
};

struct GoldenFile {
  TableKind kind = TableKind::L;
  std::vector<GoldenRecord> records;
};

/// Throws ParseError carrying the 1-based line number.
GoldenFile parse_golden(std::istream& in);
GoldenFile load_golden(const std::string& path);

struct RecordResult {
  GoldenRecord record;
  bool pass = false;
  /// max(|d re|, |d im|) in scientific notation, empty on error.
  std::string delta;
  double delta_log10 = 0;
  std::string error;
};

struct VerifyReport {
  TableKind kind = TableKind::L;
  int tolerance_digits = 48;
  std::vector<RecordResult> results;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  const RecordResult* worst() const;
  /// Summary line, failing records, worst offender; `verbose` adds every record.
  std::string format(bool verbose = false) const;
};

/// Recomputes every record; computation errors fail that record only.
VerifyReport verify_goldens(Engine& engine, const GoldenFile& golden, int tolerance_digits = 48, int jobs = 1);

/// Recomputed value of one record as (re, im) decimal strings at the context's digits.
std::pair<std::string, std::string> compute_record(Engine& engine, const GoldenRecord& rec);

}  // namespace dirichlet
