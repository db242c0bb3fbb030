#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bredonite/burnside.hpp"
#include "bredonite/cli.hpp"
#include "bredonite/coeff.hpp"
#include "bredonite/complex_io.hpp"
#include "bredonite/engine.hpp"
#include "bredonite/error.hpp"
#include "bredonite/verify/suites.hpp"

namespace py = pybind11;
using namespace bredonite;

namespace {

py::int_ to_py(const BigInt& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::dict to_py(const HomologyGroup& h, std::size_t degree) {
  py::dict d;
  d["degree"] = degree;
  d["rank"] = h.free_rank;
  d["torsion"] = to_py(h.torsion);
  return d;
}

py::list to_py(const std::vector<HomologyGroup>& hs) {
  py::list out;
  for (std::size_t n = 0; n < hs.size(); ++n) out.append(to_py(hs[n], n));
  return out;
}

py::dict to_py(const TheoryResult& r) {
  py::dict d;
  d["theory"] = std::string(to_string(r.theory));
  d["groups"] = to_py(r.groups);
  if (r.e2_page) {
    d["e2_page"] = true;
    d["exact"] = r.exact;
    py::list e2;
    for (const auto& column : r.e2) e2.append(to_py(column));
    d["e2"] = e2;
  }
  return d;
}

Subgroup subgroup_arg(const FiniteGroup& g, const std::optional<std::vector<Element>>& elems) {
  return elems ? make_subgroup(g, *elems) : whole_group(g);
}

GCWComplex complex_arg(const std::string& source) {
  if (source.starts_with("builder:")) return build_example(source.substr(8));
  if (source.find('{') != std::string::npos) return parse_complex(source);
  return load_complex(source);
}

}  // namespace

PYBIND11_MODULE(bredonite, m) {
  m.doc() = "Equivariant homology of finite G-CW complexes";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<ValidationError> validation_error(m, "ValidationError", error.ptr());
  static py::exception<ArithmeticError> arithmetic_error(m, "ArithmeticError", error.ptr());
  static py::exception<UsageError> usage_error(m, "UsageError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const ValidationError& e) {
      py::set_error(validation_error, e.what());
    } catch (const ArithmeticError& e) {
      py::set_error(arithmetic_error, e.what());
    } catch (const UsageError& e) {
      py::set_error(usage_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return construct_group(spec); }), py::arg("spec"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("spec", &FiniteGroup::spec)
      .def_property_readonly("element_names", &FiniteGroup::element_names)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("conj", &FiniteGroup::conj, "a⁻¹·h·a", py::arg("h"), py::arg("a"))
      .def("cayley_table", &FiniteGroup::cayley_table)
      .def("subgroups", [](const FiniteGroup& g) {
        std::vector<std::vector<Element>> out;
        for (const auto& s : enumerate_subgroups(g)) out.push_back(s.elems);
        return out;
      })
      .def("subgroup_classes", [](const FiniteGroup& g) {
        const SubgroupClassTable classes = subgroup_classes(g);
        py::list out;
        for (std::size_t i = 0; i < classes.size(); ++i) {
          const Subgroup& rep = classes.reps()[i];
          py::dict d;
          d["name"] = describe_subgroup(g, rep);
          d["rep"] = rep.elems;
          d["size"] = classes.class_size(i);
          d["normalizer"] = normalizer(g, rep).elems;
          out.append(d);
        }
        return out;
      })
      .def("conjugate_subgroup", [](const FiniteGroup& g, std::vector<Element> h, Element a) {
        return conjugate_subgroup(g, make_subgroup(g, std::move(h)), a).elems;
      })
      .def("__repr__", [](const FiniteGroup& g) { return "Group('" + g.spec() + "')"; });

  m.def("table_of_marks", [](const std::string& spec) {
    const BurnsideRing ring(construct_group(spec));
    py::dict d;
    d["basis"] = ring.basis_labels();
    d["marks"] = to_py(ring.table().marks);
    return d;
  }, py::arg("group"));

  m.def("burnside_multiply", [](const std::string& spec, std::size_t i, std::size_t j) {
    const BurnsideRing ring(construct_group(spec));
    if (i >= ring.rank() || j >= ring.rank()) throw UsageError("class index out of range");
    return to_py(ring.multiply(ring.basis(i), ring.basis(j)).coords);
  }, "Coordinates of [G/K_i]·[G/K_j] in the class basis.", py::arg("group"), py::arg("i"), py::arg("j"));

  m.def("coefficients", [](const std::string& theory, const std::string& spec,
                           std::optional<std::vector<Element>> subgroup, int degree) {
    const FiniteGroup g = construct_group(spec);
    const CoeffGroup v = system_value(parse_theory(theory), degree, g, subgroup_arg(g, subgroup));
    py::dict d;
    d["ring"] = std::string(to_string(v.ring));
    d["rank"] = v.rank;
    d["basis"] = v.basis_labels;
    return d;
  }, py::arg("theory"), py::arg("group"), py::arg("subgroup") = py::none(), py::arg("degree") = 0);

  m.def("coefficient_map", [](const std::string& theory, const std::string& spec, std::vector<Element> h,
                              std::vector<Element> k, Element a, int degree) {
    const FiniteGroup g = construct_group(spec);
    const OrbitMorphism f = make_orbit_morphism(g, make_subgroup(g, std::move(h)), make_subgroup(g, std::move(k)), a);
    return to_py(system_map(parse_theory(theory), degree, g, f));
  }, "Matrix of the map induced by G/H → G/K, gH ↦ gaK.", py::arg("theory"), py::arg("group"), py::arg("h"),
        py::arg("k"), py::arg("a"), py::arg("degree") = 0);

  m.def("homology", [](const std::string& theory, const std::string& source, int euler_degrees, unsigned threads) {
    EngineOptions opt;
    opt.euler_degrees = euler_degrees;
    opt.threads = threads;
    const GCWComplex x = complex_arg(source);
    TheoryResult r;
    {
      py::gil_scoped_release release;
      r = equivariant_homology(x, parse_theory(theory), opt);
    }
    return to_py(r);
  }, "Source is 'builder:<spec>', complex JSON text, or a path to a JSON file.", py::arg("theory"),
        py::arg("source"), py::arg("euler_degrees") = -1, py::arg("threads") = 1);

  m.def("complex_json", [](const std::string& source) { return dump_complex(normalize(complex_arg(source))); },
        py::arg("source"));

  m.def("suites", &verify::suite_names);

  m.def("verify", [](const std::string& suite, std::optional<std::uint64_t> seed) {
    verify::SuiteOptions opt;
    opt.seed = seed.value_or(verify::default_seed());
    opt.cli = cli::run;
    const verify::SuiteResult r = verify::run_suite(suite, opt);
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed();
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["seconds"] = r.seconds;
    return d;
  }, py::arg("suite"), py::arg("seed") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line interface in-process; returns (exit code, stdout, stderr).", py::arg("args"));
}
