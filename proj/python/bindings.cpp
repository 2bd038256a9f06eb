#include "finspace/continuous_map.hpp"
#include "finspace/corpus.hpp"
#include "finspace/error.hpp"
#include "finspace/functors.hpp"
#include "finspace/homology.hpp"
#include "finspace/homotopy.hpp"
#include "finspace/io.hpp"
#include "finspace/simplicial_complex.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace finspace;

namespace {

// Files named inside certificate or map texts are only looked up in the corpus.
std::string corpus_only(const std::string& path) {
  if (path.rfind("example:", 0) == 0) return corpus_text(path.substr(8));
  throw Error("only example:<name> references are available from Python: " + path);
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "";
}

ContinuousMap map_from_dict(const FiniteSpace& dom, const FiniteSpace& cod,
                            const std::map<std::string, std::string>& send) {
  std::vector<Element> image(dom.size());
  for (Element x = 0; x < dom.size(); ++x) {
    auto it = send.find(dom.label(x));
    if (it == send.end()) throw Error("no image given for " + dom.label(x));
    image[x] = cod.index_of(it->second);
  }
  if (send.size() != dom.size()) throw Error("images given for points outside the domain");
  return ContinuousMap(dom, cod, std::move(image));
}

py::dict weak_report(const FiniteSpace& s) {
  py::dict out;
  for (Element x = 0; x < s.size(); ++x) {
    auto r = is_weak_point(s, x);
    py::list sides;
    if (r.down_beat) sides.append("beat-down");
    if (r.up_beat) sides.append("beat-up");
    if (r.down_weak) sides.append("down-weak");
    if (r.up_weak) sides.append("up-weak");
    out[py::str(s.label(x))] = sides;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_finspace, m) {
  m.doc() = "Finite spaces, simplicial complexes and their collapses";

  // Translators run newest first, so the subclass is registered last.
  auto& error = py::register_exception<Error>(m, "FinspaceError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<FiniteSpace>(m, "FiniteSpace")
      .def_static("from_covers", &FiniteSpace::from_covers, py::arg("labels"), py::arg("covers"),
                  "Order generated by the pairs (x, y), each meaning x < y.")
      .def_static("parse", [](const std::string& text) { return parse_poset(text); })
      .def("to_text", [](const FiniteSpace& s) { return format_poset(s); })
      .def_property_readonly("labels", &FiniteSpace::labels)
      .def("__len__", &FiniteSpace::size)
      .def("leq", [](const FiniteSpace& s, const std::string& a, const std::string& b) {
        return s.leq(s.index_of(a), s.index_of(b));
      })
      .def("covers", [](const FiniteSpace& s) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : hasse_edges(s)) out.emplace_back(s.label(a), s.label(b));
        return out;
      })
      .def("__eq__", [](const FiniteSpace& a, const FiniteSpace& b) { return a == b; })
      .def("__repr__", [](const FiniteSpace& s) { return "<FiniteSpace with " + std::to_string(s.size()) + " points>"; });

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_static("from_facets",
                  [](const std::vector<std::vector<std::string>>& facets) { return SimplicialComplex::from_facets(facets); })
      .def_static("parse", [](const std::string& text) { return parse_complex(text); })
      .def("to_text", [](const SimplicialComplex& k) { return format_complex(k); })
      .def_property_readonly("vertices", &SimplicialComplex::vertex_labels)
      .def("simplices", [](const SimplicialComplex& k) {
        std::vector<std::vector<std::string>> out;
        for (const auto& s : k.simplices()) out.push_back(k.to_labels(s));
        return out;
      })
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("__len__", &SimplicialComplex::size)
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& k) {
        return "<SimplicialComplex with " + std::to_string(k.size()) + " simplices>";
      });

  py::class_<ContinuousMap>(m, "ContinuousMap")
      .def(py::init(&map_from_dict), py::arg("domain"), py::arg("codomain"), py::arg("send"))
      .def_property_readonly("domain", [](const ContinuousMap& f) { return f.domain(); })
      .def_property_readonly("codomain", [](const ContinuousMap& f) { return f.codomain(); })
      .def("__call__", [](const ContinuousMap& f, const std::string& x) {
        return f.codomain().label(f(f.domain().index_of(x)));
      });

  m.def("example_names", &corpus_names);
  m.def("example", [](const std::string& name) -> py::object {
    auto e = corpus_entry(name);
    return std::visit([](auto&& obj) { return py::cast(obj); }, e.object);
  });

  m.def("core", [](const FiniteSpace& s) { return core(s).core; });
  m.def("is_contractible", [](const FiniteSpace& s) { return is_contractible(s); });
  m.def("weak_points", &weak_report, "Each label with the kinds of removable point it is.");
  m.def("homotopy_equivalent", [](const FiniteSpace& a, const FiniteSpace& b) {
    return homotopy_equivalent(a, b).has_value();
  });
  m.def("is_distinguished", [](const ContinuousMap& f) { return is_distinguished(f).distinguished; });

  m.def(
      "collapse",
      [](const FiniteSpace& s, std::optional<FiniteSpace> target, std::size_t budget) {
        auto r = collapse_search(s, target, budget);
        std::optional<std::string> text;
        if (r.certificate) text = format_certificate(*r.certificate);
        return py::make_tuple(status_name(r.status), text);
      },
      py::arg("space"), py::arg("target") = py::none(), py::arg("budget") = kDefaultSearchBudget,
      "Searches for weak-point removals; returns (status, certificate text or None).");
  m.def(
      "collapse_complex",
      [](const SimplicialComplex& k, std::optional<SimplicialComplex> target, std::size_t budget) {
        auto r = collapse_sequence_search(k, target, budget);
        std::optional<std::string> text;
        if (r.certificate) text = format_certificate(*r.certificate);
        return py::make_tuple(status_name(r.status), text);
      },
      py::arg("complex"), py::arg("target") = py::none(), py::arg("budget") = kDefaultSearchBudget);

  m.def(
      "verify",
      [](const std::string& text) {
        auto cert = parse_certificate(text, corpus_only);
        if (auto* s = std::get_if<SpaceMoveCertificate>(&cert)) {
          auto c = verify_space_certificate(*s);
          return py::make_tuple(c.valid, c.failed_index, c.message);
        }
        auto c = verify_simplicial_certificate(std::get<SimplicialMoveCertificate>(cert));
        return py::make_tuple(c.valid, c.failed_index, c.message);
      },
      "Replays a certificate; returns (valid, failing move index or None, message).");

  m.def("order_complex", &order_complex);
  m.def("face_poset", &face_poset);
  m.def("subdivide", [](const FiniteSpace& s) { return space_subdivision(s); });
  m.def("subdivide", [](const SimplicialComplex& k) { return barycentric_subdivision(k); });
  m.def("cone", &cone, py::arg("apex"), py::arg("base"));
  m.def("free_pairs", [](const SimplicialComplex& k) {
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    for (const auto& p : free_pairs(k)) out.emplace_back(k.to_labels(p.face), k.vertex_label(p.apex));
    return out;
  });
  m.def("euler_characteristic", [](const SimplicialComplex& k) { return euler_characteristic(k); });

  m.def("bridge", [](const FiniteSpace& s) {
    auto b = bridge_space(s);
    return py::make_tuple(b.bridge, format_certificate(b.expand), format_certificate(b.collapse));
  });
  m.def("mapping_cylinder", &mapping_cylinder);

  m.def(
      "homology",
      [](const SimplicialComplex& k, bool reduced) { return format_report(reduced ? reduced_homology(k) : homology(k)); },
      py::arg("complex"), py::arg("reduced") = false);
  m.def(
      "homology",
      [](const FiniteSpace& s, bool reduced) {
        return format_report(reduced ? reduced_homology_space(s) : homology_space(s));
      },
      py::arg("space"), py::arg("reduced") = false);

  m.def("dot", [](const FiniteSpace& s) { return dot_hasse(s); });
  m.def("dot", [](const SimplicialComplex& k) { return dot_skeleton(k); });
}
