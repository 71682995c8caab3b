#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncfin/acceptance.hpp"
#include "ncfin/arnold.hpp"
#include "ncfin/characters.hpp"
#include "ncfin/doldkan.hpp"
#include "ncfin/invariants.hpp"
#include "ncfin/module.hpp"
#include "ncfin/simples.hpp"

namespace py = pybind11;
using namespace ncfin;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.str());
}

Rational from_python(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::list to_rows(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::list to_table(const std::vector<std::pair<Partition, Rational>>& table) {
  py::list out;
  for (const auto& [p, v] : table) out.append(py::make_tuple(py::tuple(py::cast(p.parts)), to_fraction(v)));
  return out;
}

SimpleSpec simple_spec(const std::string& name, std::size_t k) {
  if (name == "C") return SimpleSpec::C(k);
  if (name == "D0") return SimpleSpec::D0();
  if (name == "D1") return SimpleSpec::D1();
  throw std::invalid_argument("unknown simple '" + name + "' (expected C, D0 or D1)");
}

}  // namespace

PYBIND11_MODULE(ncfin, m) {
  m.doc() = "Exact representation theory of noncommutative finite sets over Q";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<NMor>(m, "Morphism")
      .def(py::init([](const std::string& text) { return parse_morphism(text); }), py::arg("text"))
      .def_property_readonly("dom", &NMor::dom)
      .def_property_readonly("cod", &NMor::cod)
      .def_property_readonly("values", [](const NMor& f) { return f.map().values(); })
      .def_property_readonly("fibers", &NMor::fibers)
      .def("__str__", &format_morphism)
      .def("__repr__", [](const NMor& f) { return "Morphism('" + format_morphism(f) + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const NMor& f) { return py::hash(py::str(format_morphism(f))); });

  m.def("hom_count", [](const std::string& cat, std::size_t a, std::size_t b) {
    return py::int_(py::str(hom_count(parse_category(cat), a, b).get_str()));
  }, py::arg("cat"), py::arg("m"), py::arg("n"));
  m.def("hom", [](const std::string& cat, std::size_t a, std::size_t b) { return enumerate_hom(parse_category(cat), a, b); },
        py::arg("cat"), py::arg("m"), py::arg("n"));
  m.def("compose", [](const std::string& cat, const NMor& g, const NMor& f) {
    const Category c = parse_category(cat);
    return compose_in(c, normalize_morphism(c, g), normalize_morphism(c, f));
  }, py::arg("cat"), py::arg("g"), py::arg("f"));
  m.def("in_category", [](const std::string& cat, const NMor& f) { return in_category(parse_category(cat), f); });
  m.def("lift", [](const std::string& map, const std::string& mode) {
    const LiftMode lm = mode == "delta" ? LiftMode::Delta
                        : mode == "injection" ? LiftMode::Injection
                        : mode == "canonical" ? LiftMode::Canonical
                                              : throw std::invalid_argument("mode must be delta, injection or canonical");
    return lift(parse_set_map(map), lm);
  }, py::arg("map"), py::arg("mode") = "canonical");

  py::class_<CatModule>(m, "Module")
      .def_property_readonly("category", [](const CatModule& v) { return std::string(category_name(v.category())); })
      .def_property_readonly("max_level", &CatModule::max_level)
      .def_property_readonly("dims", &CatModule::dims)
      .def("act", [](const CatModule& v, const NMor& f) { return to_rows(v.act(f)); }, py::arg("f"))
      .def("to_text", &write_catmod)
      .def_static("from_text", [](const std::string& text) { return read_catmod(text); }, py::arg("text"))
      .def("restrict", [](const CatModule& v, const std::string& along) {
        if (along != "phi" && along != "psi") throw std::invalid_argument("restrict along 'phi' or 'psi'");
        return restrict_module(v, along == "phi" ? Restriction::Phi : Restriction::Psi);
      }, py::arg("along"));

  m.def("simple", [](const std::string& name, std::size_t k, std::size_t max_level) {
    return make_simple(simple_spec(name, k), max_level);
  }, py::arg("name"), py::arg("k") = 1, py::arg("max_level") = 8);
  m.def("arnold_module", &arnold_module, py::arg("i"), py::arg("max_level"));
  m.def("arnold_dims", [](std::size_t i, std::size_t max_level) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= max_level; ++n) out.push_back(arnold_dim(i, n));
    return out;
  }, py::arg("i"), py::arg("max_level"));
  m.def("arnold_image", [](std::size_t i, const std::string& map, const std::string& monomial) {
    const SetMap f = forget(parse_morphism(map));
    const OSElement source = parse_os_element(monomial, f.dom());
    if (source.degree() != i) throw std::invalid_argument("element is not of degree " + std::to_string(i));
    OSElement out(f.cod(), i);
    for (const auto& [mono, c] : source.terms()) out.add(arnold_image(f, mono), c);
    return out.str();
  }, py::arg("i"), py::arg("map"), py::arg("element"));

  m.def("conormalize", [](const CatModule& v) { return write_cochain(conormalize(v)); }, py::arg("module"));
  m.def("realize", [](const std::string& cochain, std::size_t max_level) { return realize(read_cochain(cochain), max_level); },
        py::arg("cochain"), py::arg("max_level"));
  m.def("dim_polynomial", [](const CatModule& v) {
    const DimPolynomial p = dim_polynomial(v);
    return py::make_tuple(p.multiplicities, p.str(), p.expand().str());
  }, py::arg("module"));

  m.def("character", [](const CatModule& v, std::size_t n) { return to_table(character(v, n)); }, py::arg("module"),
        py::arg("n"));
  m.def("fit_character_polynomial", [](const CatModule& v, std::size_t d, const std::vector<std::size_t>& fit,
                                       const std::vector<std::size_t>& test) -> py::object {
    const CharacterFit r = fit_character_polynomial(v, d, fit, test);
    if (!r.ok()) return py::none();
    return py::str(r.polynomial->str());
  }, py::arg("module"), py::arg("d"), py::arg("fit_levels"), py::arg("test_levels") = std::vector<std::size_t>{});
  m.def("fit_dimension_polynomial", [](const py::sequence& values, std::size_t d) -> py::object {
    std::vector<Rational> seq;
    for (const auto& h : values) seq.push_back(from_python(h));
    const DimensionFit r = fit_dimension_polynomial(seq, d);
    if (!r.ok()) return py::none();
    return py::str(r.polynomial->str());
  }, py::arg("values"), py::arg("d"));

  m.def("invariant_dim", [](const CatModule& v, std::size_t n) { return invariants_basis(v, n).dim(); }, py::arg("module"),
        py::arg("n"));
  m.def("averaging_projector", [](const CatModule& v, std::size_t n) { return to_rows(averaging_projector(v, n)); },
        py::arg("module"), py::arg("n"));
  m.def("replication_invertible", [](const CatModule& v, std::size_t n, std::size_t k) {
    return replication_iso_check(v, n, k).pass;
  }, py::arg("module"), py::arg("n"), py::arg("m"));

  m.def("verify", [](std::uint64_t seed) {
    const AcceptanceReport r = run_acceptance(seed);
    return py::make_tuple(r.all_pass(), r.str());
  }, py::arg("seed") = 7);
}
