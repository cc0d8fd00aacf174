#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"
#include "dirichlet/tablegen.hpp"

namespace py = pybind11;
using namespace dirichlet;

namespace {

// Values cross the boundary as decimal strings so no digits are lost.
using Pair = std::pair<std::string, std::string>;

class PyEngine {
 public:
  PyEngine(int digits, int guard, std::uint64_t cutoff) : engine_(make_ctx(digits, guard, cutoff)) {}

  int digits() const { return engine_.context().target_digits; }
  std::uint64_t cutoff() const { return engine_.context().cutoff; }

  Pair l_value(int m, int r, long s) { return split(engine_.l_value(chi(m, r), s)); }
  Pair l_incomplete(int m, int r, long s, std::uint64_t M) { return split(engine_.l_incomplete(M, chi(m, r), s)); }
  Pair l_deriv(int m, int r, long s) { return split(engine_.l_deriv(chi(m, r), s)); }
  Pair prime_l(int m, int r, long s) { return split(engine_.prime_l_series(chi(m, r), s)); }
  std::string p_mod(int m, int n, long s) { return str(engine_.p_mod(m, n, s)); }
  std::string prime_zeta(long s) { return str(engine_.prime_zeta(s)); }
  std::string zeta_mod(int m, int n, long s) { return str(engine_.zeta_mod(m, n, s)); }
  std::string constant(const std::string& kind, int m, int n, long s) {
    return str(engine_.constant(parse(kind), m, n, s));
  }
  std::string star(const std::string& kind, int m, long s) { return str(engine_.star_row(parse(kind), m, s)); }

  std::string emit(const std::string& kind, std::vector<int> moduli, std::optional<long> smin,
                   std::optional<long> smax, const std::string& format, bool fillers, int jobs) {
    EmitOptions opt;
    auto k = parse_kind(kind);
    if (!k) throw UsageError("unknown table kind '" + kind + "'");
    opt.kind = *k;
    opt.moduli = std::move(moduli);
    opt.smin = smin;
    opt.smax = smax;
    if (format == "json") {
      opt.format = OutputFormat::Json;
    } else if (format != "paper") {
      throw UsageError("format must be 'paper' or 'json'");
    }
    opt.fillers = fillers;
    opt.jobs = jobs;
    return emit_table(engine_, opt);
  }

  std::pair<bool, std::string> verify_text(const std::string& text, int tolerance, bool verbose, int jobs) {
    std::istringstream in(text);
    VerifyReport rep = verify_goldens(engine_, parse_golden(in), tolerance, jobs);
    return {rep.ok(), rep.format(verbose)};
  }

  std::pair<bool, std::string> verify_file(const std::string& path, int tolerance, bool verbose, int jobs) {
    VerifyReport rep = verify_goldens(engine_, load_golden(path), tolerance, jobs);
    return {rep.ok(), rep.format(verbose)};
  }

 private:
  static PrecisionContext make_ctx(int digits, int guard, std::uint64_t cutoff) {
    PrecisionContext ctx;
    ctx.target_digits = digits;
    ctx.guard_digits = guard;
    ctx.cutoff = cutoff;
    return ctx;
  }
  static ConstantKind parse(const std::string& kind) {
    auto k = parse_constant_kind(kind);
    if (!k) throw UsageError("constant kind must be one of a, q, f, c");
    return *k;
  }
  static const Character& chi(int m, int r) {
    const CharacterTable& t = cached_character_table(m);
    if (r < 1 || r > t.phi()) throw DomainError("character index out of range");
    return t[r];
  }
  std::string str(const BigReal& x) const { return x.to_fixed(engine_.context().target_digits); }
  Pair split(const BigComplex& z) const { return {str(z.re), str(z.im)}; }

  Engine engine_;
};

py::list table(int m) {
  const CharacterTable t = character_table(m);
  py::list rows;
  for (const Character& c : t.rows()) {
    std::vector<std::string> values;
    for (int n = 1; n <= m; ++n) values.push_back(c(n).symbol());
    py::dict row;
    row["index"] = c.index;
    row["values"] = values;
    row["conductor"] = c.conductor;
    row["parity"] = c.parity();
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet characters, L-series, prime zeta modulo functions and residue-class constants";

  // translators registered later are tried first, so the base goes first
  auto base = py::register_exception<Error>(m, "DirichletError");
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  m.def("character_table", &table, py::arg("m"), "Rows of the character table mod m, principal first.");
  m.def("totient", [](std::uint64_t n) { return totient(n); }, py::arg("n"));
  m.def("primes_up_to", &primes_up_to, py::arg("limit"));

  using R = py::call_guard<py::gil_scoped_release>;
  py::class_<PyEngine>(m, "Engine")
      .def(py::init<int, int, std::uint64_t>(), py::arg("digits") = 50, py::arg("guard") = 15,
           py::arg("cutoff") = 100000)
      .def_property_readonly("digits", &PyEngine::digits)
      .def_property_readonly("cutoff", &PyEngine::cutoff)
      .def("l_value", &PyEngine::l_value, py::arg("m"), py::arg("r"), py::arg("s"), R())
      .def("l_incomplete", &PyEngine::l_incomplete, py::arg("m"), py::arg("r"), py::arg("s"), py::arg("M"), R())
      .def("l_deriv", &PyEngine::l_deriv, py::arg("m"), py::arg("r"), py::arg("s"), R())
      .def("prime_l", &PyEngine::prime_l, py::arg("m"), py::arg("r"), py::arg("s"), R())
      .def("p_mod", &PyEngine::p_mod, py::arg("m"), py::arg("n"), py::arg("s"), R())
      .def("prime_zeta", &PyEngine::prime_zeta, py::arg("s"), R())
      .def("zeta_mod", &PyEngine::zeta_mod, py::arg("m"), py::arg("n"), py::arg("s"), R())
      .def("constant", &PyEngine::constant, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("s"), R())
      .def("star", &PyEngine::star, py::arg("kind"), py::arg("m"), py::arg("s"), R())
      .def("emit", &PyEngine::emit, py::arg("kind"), py::arg("moduli"), py::arg("smin") = py::none(),
           py::arg("smax") = py::none(), py::arg("format") = "paper", py::arg("fillers") = false, py::arg("jobs") = 1,
           R())
      .def("verify_text", &PyEngine::verify_text, py::arg("text"), py::arg("tolerance") = 48,
           py::arg("verbose") = false, py::arg("jobs") = 1, R())
      .def("verify_file", &PyEngine::verify_file, py::arg("path"), py::arg("tolerance") = 48,
           py::arg("verbose") = false, py::arg("jobs") = 1, R());
}
