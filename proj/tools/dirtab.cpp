// dirtab: regenerate the character, L-series, prime-series, Euler-product and
// constant tables, or check golden listings against fresh computations.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/tablegen.hpp"

#ifndef DIRICHLET_GOLDEN_DIR
#define DIRICHLET_GOLDEN_DIR "data/golden"
#endif

using namespace dirichlet;

namespace {

struct Common {
  std::string modulus;
  std::optional<long> smin;
  std::optional<long> smax;
  int digits = 50;
  std::uint64_t cutoff = 100000;
  std::string format = "paper";
  bool fillers = false;
  int jobs = 1;
};

// "5", "2-14" or "3,5,7-9"
std::vector<int> parse_moduli(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        int lo = std::stoi(part.substr(0, dash));
        int hi = std::stoi(part.substr(dash + 1));
        if (lo > hi) throw UsageError("empty modulus range " + part);
        for (int m = lo; m <= hi; ++m) out.push_back(m);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad --modulus value '" + part + "'");
    }
  }
  return out;
}

std::string default_moduli(TableKind k) {
  switch (k) {
    case TableKind::Chars:
      return "2-22";
    case TableKind::L:
      return "2-14";
    case TableKind::Lprime:
      return "2-7";
    case TableKind::S:
      return "2-6";
    case TableKind::P:
      return "3-10";
    case TableKind::Zeta:
      return "3-14";
    default:
      return "3-7";
  }
}

PrecisionContext make_context(const Common& c) {
  PrecisionContext ctx;
  ctx.target_digits = c.digits;
  ctx.cutoff = c.cutoff;
  return ctx;
}

void add_common(CLI::App* cmd, Common& c, bool table) {
  cmd->add_option("--digits", c.digits, "target decimal digits")->check(CLI::Range(1, 10000));
  cmd->add_option("--cutoff", c.cutoff, "primes p <= cutoff are summed directly")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));
  if (!table) return;
  cmd->add_option("--modulus", c.modulus, "modulus, range a-b, or comma list");
  cmd->add_option("--smin", c.smin, "smallest s");
  cmd->add_option("--smax", c.smax, "largest s");
  cmd->add_option("--format", c.format, "paper or json")->check(CLI::IsMember({"paper", "json"}));
  cmd->add_flag("--fillers", c.fillers, "one-line placeholders for duplicate and conjugate blocks");
}

int emit(TableKind kind, const Common& c) {
  Engine engine(make_context(c));
  EmitOptions opts;
  opts.kind = kind;
  opts.moduli = parse_moduli(c.modulus.empty() ? default_moduli(kind) : c.modulus);
  opts.smin = c.smin;
  opts.smax = c.smax;
  opts.format = c.format == "json" ? OutputFormat::Json : OutputFormat::Paper;
  opts.fillers = c.fillers;
  opts.jobs = c.jobs;
  std::cout << emit_table(engine, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet character, L-series and prime-product tables"};
  app.require_subcommand(1);
  Common common;

  struct Sub {
    const char* name;
    const char* help;
    TableKind kind;
  };
  const Sub subs[] = {
      {"chars", "character tables", TableKind::Chars},
      {"l", "L(s, chi)", TableKind::L},
      {"lprime", "L'(s, chi)", TableKind::Lprime},
      {"primel", "prime L-series S(s, chi)", TableKind::S},
      {"pzm", "prime zeta modulo functions P_{m,n}(s)", TableKind::P},
      {"zetamod", "Euler modulo products zeta_{m,n}(s)", TableKind::Zeta},
  };
  std::vector<std::pair<CLI::App*, TableKind>> table_cmds;
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common(cmd, common, true);
    table_cmds.emplace_back(cmd, s.kind);
  }

  CLI::App* cconst = app.add_subcommand("const", "constants A, Q, F or C per residue class");
  std::string family;
  cconst->add_option("family", family, "a, q, f or c")->required()->check(CLI::IsMember({"a", "q", "f", "c", "A", "Q", "F", "C"}));
  add_common(cconst, common, true);

  CLI::App* cverify = app.add_subcommand("verify", "recompute golden listings and compare");
  std::vector<std::string> files;
  int tolerance = 48;
  bool verbose = false;
  cverify->add_option("files", files, "golden files (default: the bundled set)");
  cverify->add_option("--tolerance", tolerance, "pass iff |delta| < 10^-tolerance")->check(CLI::Range(1, 10000));
  cverify->add_flag("--verbose", verbose, "list every record");
  add_common(cverify, common, false);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto [cmd, kind] : table_cmds) {
      if (cmd->parsed()) return emit(kind, common);
    }
    if (cconst->parsed()) {
      const std::string k(1, static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))));
      return emit(*parse_kind(k), common);
    }
    if (cverify->parsed()) {
      if (files.empty()) {
        for (const char* k : {"chars", "L", "Lprime", "S", "P", "Zeta", "A", "Q", "F", "C"}) {
          files.push_back(std::string(DIRICHLET_GOLDEN_DIR) + "/" + k + ".txt");
        }
      }
      Engine engine(make_context(common));
      bool ok = true;
      for (const auto& f : files) {
        GoldenFile g = load_golden(f);
        VerifyReport r = verify_goldens(engine, g, tolerance, common.jobs);
        std::cout << r.format(verbose);
        ok = ok && r.ok();
      }
      std::cout << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
