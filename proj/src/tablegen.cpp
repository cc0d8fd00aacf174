#include "dirichlet/tablegen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

using ordered_json = nlohmann::ordered_json;

struct KindInfo {
  TableKind kind;
  const char* name;
  const char* column;
};

constexpr KindInfo kKinds[] = {
    {TableKind::Chars, "chars", ""},   {TableKind::L, "L", "L"},       {TableKind::Lprime, "Lprime", "L'"},
    {TableKind::S, "S", "S"},          {TableKind::P, "P", "P"},       {TableKind::Zeta, "Zeta", "Zeta"},
    {TableKind::A, "A", "A"},          {TableKind::Q, "Q", "Q"},       {TableKind::F, "F", "F"},
    {TableKind::C, "C", "C"},
};

const KindInfo& info(TableKind k) {
  for (const auto& ki : kKinds) {
    if (ki.kind == k) return ki;
  }
  throw UsageError("unknown table kind");
}

ConstantKind to_constant(TableKind k) {
  switch (k) {
    case TableKind::A:
      return ConstantKind::Artin;
    case TableKind::Q:
      return ConstantKind::Quadratic;
    case TableKind::F:
      return ConstantKind::FellerTornier;
    case TableKind::C:
      return ConstantKind::HardyLittlewood;
    default:
      throw UsageError(kind_name(k) + " is not a constant family");
  }
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string two(int v) { return pad_left(std::to_string(v), 2); }

// Runs jobs[i]() for all i on `threads` workers; results land by index.
void run_parallel(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

BigComplex compute_value(Engine& engine, const GoldenRecord& rec) {
  auto real = [](BigReal v) { return BigComplex(std::move(v)); };
  switch (rec.kind) {
    case TableKind::L:
      return engine.l_value(cached_character_table(rec.m)[rec.index], rec.s);
    case TableKind::Lprime:
      return engine.l_deriv(cached_character_table(rec.m)[rec.index], rec.s);
    case TableKind::S:
      return engine.prime_l_series(cached_character_table(rec.m)[rec.index], rec.s);
    case TableKind::P:
      return real(engine.p_mod(rec.m, rec.index, rec.s));
    case TableKind::Zeta:
      return real(engine.zeta_mod(rec.m, rec.index, rec.s));
    case TableKind::A:
    case TableKind::Q:
    case TableKind::F:
    case TableKind::C:
      if (rec.star) return real(engine.star_row(to_constant(rec.kind), rec.m, rec.s));
      return real(engine.constant(to_constant(rec.kind), rec.m, rec.index, rec.s));
    case TableKind::Chars:
      break;
  }
  throw UsageError("character records have no numeric value");
}

// Smallest modulus m' < m whose character agrees with chi on all integers.
std::optional<std::pair<int, int>> same_block(const Character& chi) {
  const int m = chi.modulus;
  for (int mp = 2; mp < m; ++mp) {
    if (m % mp != 0) continue;
    // same prime divisors, so the zero sets agree
    auto pm = factorize(static_cast<std::uint64_t>(m));
    auto pp = factorize(static_cast<std::uint64_t>(mp));
    if (pm.size() != pp.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < pm.size(); ++i) same = same && pm[i].first == pp[i].first;
    if (!same) continue;
    std::vector<UnitRoot> lifted;
    const CharacterTable& small = cached_character_table(mp);
    const int ratio = chi.order() / small.phi();
    for (int n = 0; n < mp; ++n) {
      const UnitRoot& v = chi(n);
      if (v.is_zero()) {
        lifted.push_back(UnitRoot::zero(small.phi()));
      } else if (v.exponent() % ratio != 0) {
        same = false;
        break;
      } else {
        lifted.push_back(UnitRoot::power(small.phi(), v.exponent() / ratio));
      }
    }
    if (!same) continue;
    int r = small.find(lifted);
    if (r == 0) continue;
    // the lift must agree on all of Z/m as well
    bool agree = true;
    for (int n = 0; n < m && agree; ++n) {
      const UnitRoot& a = chi(n);
      const UnitRoot& b = small[r](n);
      agree = a.is_zero() == b.is_zero() && (a.is_zero() || a.exponent() == b.exponent() * ratio);
    }
    if (agree) return std::make_pair(mp, r);
  }
  return std::nullopt;
}

struct Cell {
  std::string literal;  // used when !record
  std::optional<GoldenRecord> record;
};

std::string format_number(const BigReal& v, int digits) {
  return pad_left(v.to_fixed(digits), static_cast<std::size_t>(digits + 3));
}

std::string header_line(TableKind kind, int digits) {
  const KindInfo& ki = info(kind);
  if (is_complex_kind(kind)) {
    std::string h = std::string(" m  r  s  Re(") + ki.column + ")";
    const std::size_t im_col = 10 + static_cast<std::size_t>(digits) + 4;
    if (h.size() < im_col) h += std::string(im_col - h.size(), ' ');
    return h + "Im(" + ki.column + ")";
  }
  return std::string(" m  n  s  ") + ki.column;
}

std::vector<Cell> plan_cells(const EmitOptions& opts, long smin, long smax) {
  std::vector<Cell> cells;
  const TableKind kind = opts.kind;
  for (int m : opts.moduli) {
    const CharacterTable& table = cached_character_table(m);
    if (kind == TableKind::Chars) {
      for (const Character& chi : table.rows()) {
        GoldenRecord rec;
        rec.kind = kind;
        rec.m = m;
        rec.index = chi.index;
        for (int n = 1; n <= m; ++n) rec.symbols.push_back(chi(n).symbol());
        rec.conductor = chi.conductor;
        cells.push_back({"", rec});
      }
      cells.push_back({"", std::nullopt});
      continue;
    }
    if (is_complex_kind(kind)) {
      for (const Character& chi : table.rows()) {
        if (opts.fillers && opts.format == OutputFormat::Paper) {
          if (auto sb = same_block(chi)) {
            cells.push_back({two(m) + " " + two(chi.index) + "  *  same block as m=" + std::to_string(sb->first) +
                                 ", r=" + std::to_string(sb->second) + " above",
                             std::nullopt});
            continue;
          }
          const int rc = table.conjugate(chi.index).index;
          if (rc < chi.index) {
            cells.push_back({two(m) + " " + two(chi.index) + "  *  complex conjugate of block m=" +
                                 std::to_string(m) + ", r=" + std::to_string(rc) + " above",
                             std::nullopt});
            continue;
          }
        }
        for (long s = smin; s <= smax; ++s) {
          if (s == 1 && chi.is_principal()) continue;
          GoldenRecord rec;
          rec.kind = kind;
          rec.m = m;
          rec.index = chi.index;
          rec.s = s;
          cells.push_back({"", rec});
        }
      }
    } else {
      for (long s = smin; s <= smax; ++s) {
        for (int n = 1; n <= m; ++n) {
          if (std::gcd(n, m) != 1) continue;
          GoldenRecord rec;
          rec.kind = kind;
          rec.m = m;
          rec.index = n;
          rec.s = s;
          cells.push_back({"", rec});
        }
        if (is_constant_kind(kind)) {
          GoldenRecord rec;
          rec.kind = kind;
          rec.m = m;
          rec.star = true;
          rec.s = s;
          cells.push_back({"", rec});
        }
      }
    }
    cells.push_back({"", std::nullopt});  // blank separator after each modulus
  }
  return cells;
}

long parse_long(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  }
}

void check_decimal(const std::string& tok, int line) {
  try {
    BigReal probe(tok, 64);
    (void)probe;
  } catch (const std::exception&) {
    throw ParseError("malformed decimal '" + tok + "'", line);
  }
}

GoldenFile parse_json_golden(const std::string& text) {
  GoldenFile out;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
  }
  if (!doc.is_array()) throw ParseError("JSON golden data must be an array of rows", 1);
  int line = 1;
  bool first = true;
  for (const auto& row : doc) {
    ++line;
    try {
      GoldenRecord rec;
      auto kind = parse_kind(row.at("kind").get<std::string>());
      if (!kind) throw ParseError("unknown kind", line);
      rec.kind = *kind;
      if (first) {
        out.kind = rec.kind;
        first = false;
      } else if (rec.kind != out.kind) {
        throw ParseError("mixed kinds in one file", line);
      }
      rec.m = row.at("m").get<int>();
      rec.line = line;
      if (rec.kind == TableKind::Chars) {
        rec.index = row.at("r").get<int>();
        rec.symbols = row.at("values").get<std::vector<std::string>>();
        rec.conductor = row.at("conductor").get<int>();
      } else if (is_complex_kind(rec.kind)) {
        rec.index = row.at("r").get<int>();
        rec.s = row.at("s").get<long>();
        rec.re = row.at("re").get<std::string>();
        rec.im = row.at("im").get<std::string>();
        check_decimal(rec.re, line);
        check_decimal(rec.im, line);
      } else {
        const auto& n = row.at("n");
        if (n.is_string() && n.get<std::string>() == "*") {
          rec.star = true;
        } else {
          rec.index = n.get<int>();
        }
        rec.s = row.at("s").get<long>();
        rec.re = row.at("value").get<std::string>();
        check_decimal(rec.re, line);
      }
      out.records.push_back(std::move(rec));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad JSON row: ") + e.what(), line);
    }
  }
  return out;
}

}  // namespace

std::string kind_name(TableKind k) { return info(k).name; }

std::optional<TableKind> parse_kind(const std::string& name) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& ki : kKinds) {
    std::string n = ki.name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == low) return ki.kind;
  }
  if (low == "l'") return TableKind::Lprime;
  return std::nullopt;
}

bool is_complex_kind(TableKind k) { return k == TableKind::L || k == TableKind::Lprime || k == TableKind::S; }

bool is_constant_kind(TableKind k) {
  return k == TableKind::A || k == TableKind::Q || k == TableKind::F || k == TableKind::C;
}

std::pair<long, long> default_s_range(TableKind k) {
  switch (k) {
    case TableKind::L:
    case TableKind::Lprime:
      return {1, 10};
    case TableKind::S:
      return {1, 9};
    case TableKind::P:
    case TableKind::Zeta:
      return {2, 10};
    case TableKind::A:
    case TableKind::Q:
      return {1, 5};
    case TableKind::F:
      return {2, 5};
    case TableKind::C:
      return {2, 6};
    case TableKind::Chars:
      break;
  }
  return {0, 0};
}

std::string GoldenRecord::label() const {
  std::string idx = star ? "*" : std::to_string(index);
  std::string out = kind_name(kind) + " m=" + std::to_string(m) + (is_complex_kind(kind) || kind == TableKind::Chars ? " r=" : " n=") + idx;
  if (kind != TableKind::Chars) out += " s=" + std::to_string(s);
  return out;
}

std::string emit_table(Engine& engine, const EmitOptions& opts) {
  if (opts.moduli.empty()) throw UsageError("no modulus given");
  for (int m : opts.moduli) {
    if (m < 2) throw UsageError("moduli start at 2");
    if (opts.kind != TableKind::Chars) engine.context().validate(m);
  }
  auto [dmin, dmax] = default_s_range(opts.kind);
  const long smin = opts.smin.value_or(dmin);
  const long smax = opts.smax.value_or(dmax);
  if (opts.kind != TableKind::Chars) {
    if (smin > smax) throw UsageError("smin exceeds smax");
    long floor_s = 1;
    if (opts.kind == TableKind::P || opts.kind == TableKind::Zeta) floor_s = 2;
    if (is_constant_kind(opts.kind)) floor_s = constant_min_order(to_constant(opts.kind));
    if (smin < floor_s) {
      throw UsageError(kind_name(opts.kind) + " tables need s >= " + std::to_string(floor_s));
    }
  }

  std::vector<Cell> cells = plan_cells(opts, smin, smax);
  std::vector<std::optional<BigComplex>> values(cells.size());
  std::vector<std::string> errors(cells.size());
  if (opts.kind != TableKind::Chars) {
    run_parallel(cells.size(), opts.jobs, [&](std::size_t i) {
      if (!cells[i].record) return;
      try {
        values[i] = compute_value(engine, *cells[i].record);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    });
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!errors[i].empty()) throw Error(cells[i].record->label() + ": " + errors[i]);
  }

  const int digits = engine.context().target_digits;
  std::ostringstream out;
  if (opts.format == OutputFormat::Json) {
    out << "[";
    bool first = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!cells[i].record) continue;
      const GoldenRecord& rec = *cells[i].record;
      ordered_json row;
      row["kind"] = kind_name(rec.kind);
      row["m"] = rec.m;
      if (rec.kind == TableKind::Chars) {
        row["r"] = rec.index;
        row["values"] = rec.symbols;
        row["conductor"] = rec.conductor;
      } else if (is_complex_kind(rec.kind)) {
        row["r"] = rec.index;
        row["s"] = rec.s;
        row["re"] = values[i]->re.to_fixed(digits);
        row["im"] = values[i]->im.to_fixed(digits);
      } else {
        if (rec.star) {
          row["n"] = "*";
        } else {
          row["n"] = rec.index;
        }
        row["s"] = rec.s;
        row["value"] = values[i]->re.to_fixed(digits);
      }
      out << (first ? "\n" : ",\n") << row.dump();
      first = false;
    }
    out << "\n]\n";
    return out.str();
  }

  if (opts.kind != TableKind::Chars) out << header_line(opts.kind, digits) << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (!c.record) {
      out << c.literal << "\n";
      continue;
    }
    const GoldenRecord& rec = *c.record;
    if (rec.kind == TableKind::Chars) {
      out << rec.m << " " << rec.index;
      for (const auto& sym : rec.symbols) out << " " << sym;
      out << " " << rec.conductor << "\n";
      continue;
    }
    out << two(rec.m) << " " << (rec.star ? std::string(" *") : two(rec.index)) << " " << two(static_cast<int>(rec.s))
        << " " << format_number(values[i]->re, digits);
    if (is_complex_kind(rec.kind)) out << " " << format_number(values[i]->im, digits);
    out << "\n";
  }
  return out.str();
}

GoldenFile parse_golden(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_json_golden(text);

  GoldenFile out;
  bool have_kind = false;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      const std::string tag = "# kind:";
      if (line.rfind(tag, 0) == 0) {
        std::string name = line.substr(tag.size());
        name.erase(0, name.find_first_not_of(' '));
        auto k = parse_kind(name);
        if (!k) throw ParseError("unknown kind '" + name + "'", lineno);
        out.kind = *k;
        have_kind = true;
      }
      continue;
    }
    if (!have_kind) throw ParseError("missing '# kind:' header before data", lineno);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok[0] == "m") continue;  // column header

    GoldenRecord rec;
    rec.kind = out.kind;
    rec.line = lineno;
    if (tok.size() < 3) throw ParseError("too few columns", lineno);
    rec.m = static_cast<int>(parse_long(tok[0], lineno, "m"));
    if (rec.m < 1) throw ParseError("modulus must be positive", lineno);

    if (out.kind == TableKind::Chars) {
      rec.index = static_cast<int>(parse_long(tok[1], lineno, "r"));
      if (tok.size() != static_cast<std::size_t>(rec.m) + 3) {
        throw ParseError("expected " + std::to_string(rec.m + 3) + " columns", lineno);
      }
      rec.symbols.assign(tok.begin() + 2, tok.end() - 1);
      rec.conductor = static_cast<int>(parse_long(tok.back(), lineno, "conductor"));
      out.records.push_back(std::move(rec));
      continue;
    }
    if (is_complex_kind(out.kind)) {
      if (tok[2] == "*") continue;  // placeholder for a duplicate or conjugate block
      if (tok.size() != 5) throw ParseError("expected 5 columns: m r s re im", lineno);
      rec.index = static_cast<int>(parse_long(tok[1], lineno, "r"));
      rec.s = parse_long(tok[2], lineno, "s");
      rec.re = tok[3];
      rec.im = tok[4];
      check_decimal(rec.re, lineno);
      check_decimal(rec.im, lineno);
    } else {
      if (tok.size() != 4) throw ParseError("expected 4 columns: m n s value", lineno);
      if (tok[1] == "*") {
        if (!is_constant_kind(out.kind)) throw ParseError("star rows only exist for constants", lineno);
        rec.star = true;
      } else {
        rec.index = static_cast<int>(parse_long(tok[1], lineno, "n"));
      }
      rec.s = parse_long(tok[2], lineno, "s");
      rec.re = tok[3];
      check_decimal(rec.re, lineno);
    }
    if (!rec.star && (rec.index < 1 || rec.index > rec.m)) throw ParseError("index out of range", lineno);
    out.records.push_back(std::move(rec));
  }
  if (!have_kind) throw ParseError("missing '# kind:' header", std::max(lineno, 1));
  return out;
}

GoldenFile load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_golden(in);
}

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const RecordResult& r) { return r.pass; }));
}

int VerifyReport::failed() const { return static_cast<int>(results.size()) - passed(); }

const RecordResult* VerifyReport::worst() const {
  const RecordResult* w = nullptr;
  for (const auto& r : results) {
    if (!r.error.empty()) return &r;
    if (!w || r.delta_log10 > w->delta_log10) w = &r;
  }
  return w;
}

std::string VerifyReport::format(bool verbose) const {
  std::ostringstream out;
  out << kind_name(kind) << ": " << results.size() << " records, " << passed() << " passed, " << failed()
      << " failed (tolerance 1e-" << tolerance_digits << ")\n";
  for (const auto& r : results) {
    if (r.pass && !verbose) continue;
    out << (r.pass ? "  ok   " : "  FAIL ") << r.record.label() << " (line " << r.record.line << ")";
    if (!r.error.empty()) {
      out << ": " << r.error;
    } else if (!r.delta.empty()) {
      out << ": |delta| = " << r.delta;
    }
    out << "\n";
  }
  const RecordResult* w = worst();
  if (w && (!w->error.empty() || !w->delta.empty())) {
    out << "  worst: " << w->record.label();
    if (!w->error.empty()) {
      out << " (error)";
    } else if (!w->delta.empty()) {
      out << " |delta| = " << w->delta;
    }
    out << "\n";
  }
  return out.str();
}

VerifyReport verify_goldens(Engine& engine, const GoldenFile& golden, int tolerance_digits, int jobs) {
  VerifyReport report;
  report.kind = golden.kind;
  report.tolerance_digits = tolerance_digits;
  report.results.resize(golden.records.size());
  const mpfr_prec_t bits = engine.context().bits();
  const BigReal tol = pow10(-tolerance_digits, bits);

  run_parallel(golden.records.size(), jobs, [&](std::size_t i) {
    const GoldenRecord& rec = golden.records[i];
    RecordResult& res = report.results[i];
    res.record = rec;
    try {
      if (rec.kind == TableKind::Chars) {
        if (rec.m < 2) throw DomainError("moduli start at 2");
        const CharacterTable& t = cached_character_table(rec.m);
        if (rec.index < 1 || rec.index > t.phi()) throw DomainError("row index out of range");
        const Character& chi = t[rec.index];
        std::string mismatch;
        for (int n = 1; n <= rec.m; ++n) {
          const std::string got = chi(n).symbol();
          if (got != rec.symbols[static_cast<std::size_t>(n - 1)]) {
            mismatch = "chi(" + std::to_string(n) + ") = " + got + ", expected " + rec.symbols[static_cast<std::size_t>(n - 1)];
            break;
          }
        }
        if (mismatch.empty() && chi.conductor != rec.conductor) {
          mismatch = "conductor " + std::to_string(chi.conductor) + ", expected " + std::to_string(rec.conductor);
        }
        res.pass = mismatch.empty();
        res.error = mismatch;
        res.delta_log10 = res.pass ? -HUGE_VAL : 0;
        return;
      }
      BigComplex got = compute_value(engine, rec);
      BigReal d = abs(got.re - BigReal(rec.re, bits));
      if (is_complex_kind(rec.kind)) {
        BigReal di = abs(got.im - BigReal(rec.im, bits));
        if (di > d) d = di;
      }
      res.pass = d < tol;
      res.delta = d.is_zero() ? "0" : d.to_sci(2);
      res.delta_log10 = d.is_zero() ? -HUGE_VAL : std::log10(d.to_double());
    } catch (const Error& e) {
      res.pass = false;
      res.error = e.what();
    } catch (const std::exception& e) {
      res.pass = false;
      res.error = e.what();
    }
  });
  return report;
}

std::pair<std::string, std::string> compute_record(Engine& engine, const GoldenRecord& rec) {
  BigComplex v = compute_value(engine, rec);
  const int digits = engine.context().target_digits;
  return {v.re.to_fixed(digits), v.im.to_fixed(digits)};
}

}  // namespace dirichlet
