#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "a3kit/error.hpp"
#include "a3kit/io.hpp"
#include "a3kit/yangbaxter.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace a3kit;

namespace {

py::dict report_dict(const CheckReport& rep, const std::vector<std::string>& labels) {
  py::list failures;
  for (const auto& w : rep.failures) {
    py::list at, residual;
    for (auto i : w.indices) at.append(i < labels.size() ? labels[i] : std::to_string(i));
    for (const auto& q : w.residual) residual.append(q.str());
    py::dict f;
    f["condition"] = w.condition;
    f["at"] = py::tuple(at);
    f["residual"] = residual;
    failures.append(f);
  }
  py::dict d;
  d["name"] = rep.law_name;
  d["passed"] = rep.passed;
  d["failures"] = failures;
  return d;
}

LawKind law_of(const std::string& name) {
  if (auto l = parse_law(name)) return *l;
  throw Error(ErrorKind::Parse, "unknown law '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_a3kit, m) {
  m.doc() = "exact checks for A3-associative algebras";
  py::register_exception<Error>(m, "A3Error", PyExc_ValueError);

  m.attr("SCHEMA") = std::string(kAlgebraSchema);

  m.def("normalize", [](const std::string& text) { return write_algebra_file(parse_algebra_file(text)); },
        "parse a document and write it back in canonical form");

  m.def(
      "check_law",
      [](const std::string& text, const std::string& law) {
        const auto f = parse_algebra_file(text);
        return report_dict(check_law(f.algebra, law_of(law)), f.algebra.labels());
      },
      py::arg("document"), py::arg("law"));

  m.def("classify", [](const std::string& text) {
    const auto f = parse_algebra_file(text);
    py::dict out;
    for (LawKind l : kAllLaws) out[py::str(std::string(law_name(l)))] = check_law(f.algebra, l).passed;
    return out;
  });

  m.def(
      "aybe_residual",
      [](const std::string& text, const std::string& tensor) {
        const auto f = parse_algebra_file(text);
        const auto it = f.tensors.find(tensor);
        if (it == f.tensors.end()) throw Error(ErrorKind::Parse, "no tensor '" + tensor + "'");
        const Tensor3 ay = aybe_residual(f.algebra, it->second);
        const auto& L = f.algebra.labels();
        py::dict out;
        for (std::size_t a = 0; a < ay.dim(); ++a)
          for (std::size_t b = 0; b < ay.dim(); ++b)
            for (std::size_t c = 0; c < ay.dim(); ++c)
              if (!ay(a, b, c).is_zero()) out[py::make_tuple(L[a], L[b], L[c])] = ay(a, b, c).str();
        return out;
      },
      py::arg("document"), py::arg("tensor"), "nonzero entries of AY(r), keyed by label triples");

  m.def(
      "rb_to_ybe",
      [](const std::string& text, const std::string& map) {
        const auto f = parse_algebra_file(text);
        const auto it = f.maps.find(map);
        if (it == f.maps.end()) throw Error(ErrorKind::Parse, "no map '" + map + "'");
        const auto lift = rb_to_ybe(f.algebra, it->second);
        AlgebraFile out;
        out.algebra = lift.double_algebra;
        out.tensors.emplace("r", lift.r);
        return write_algebra_file(out);
      },
      py::arg("document"), py::arg("map"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run the command line tool in-process; returns (exit code, stdout, stderr)");
}
