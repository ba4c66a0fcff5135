#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "ditop/components.hpp"
#include "ditop/io.hpp"
#include "ditop/maps.hpp"
#include "ditop/tc.hpp"

namespace py = pybind11;
using namespace ditop;

namespace {

using PyComplexPtr = std::shared_ptr<PrecubicalSet>;

PyComplexPtr fromJson(const std::string& text) {
  return std::make_shared<PrecubicalSet>(complex_from_json(text));
}

PyComplexPtr named(const std::string& name, int n) {
  return std::make_shared<PrecubicalSet>(build_named(name, n).toRaw());
}

struct PyAnalysis {
  std::shared_ptr<Analysis> an;
  explicit PyAnalysis(PyComplexPtr X, std::optional<int> maxLen, int workers)
      : an(std::make_shared<Analysis>(X, maxLen, workers)) {}
};

AdmissibleMap makeMap(PyAnalysis& src, PyAnalysis& tgt,
                      const std::map<std::string, std::string>& vm) {
  const PrecubicalSet& X = src.an->complex();
  const PrecubicalSet& Y = tgt.an->complex();
  std::vector<int> v(X.vertexCount(), -1);
  for (const auto& [a, b] : vm) {
    int ar = X.vertexRank(a), br = Y.vertexRank(b);
    if (ar < 0 || br < 0) throw ParameterError("unknown vertex in map");
    v[ar] = br;
  }
  AdmissibleMap f;
  f.src = src.an->complexPtr();
  f.tgt = tgt.an->complexPtr();
  MapCheckReport rep = check_admissible(X, tgt.an->table(), v, &f);
  if (!rep.admissible) throw ParameterError("map not admissible: " + rep.violations.front());
  return f;
}

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

}  // namespace

PYBIND11_MODULE(_ditop, m) {
  m.doc() = "directed topology of finite pre-cubical sets";

  py::register_exception<ParameterError>(m, "ParameterError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError");

  py::class_<PrecubicalSet, PyComplexPtr>(m, "PrecubicalSet")
      .def_property_readonly("name", &PrecubicalSet::name)
      .def_property_readonly("cell_count", &PrecubicalSet::cellCount)
      .def_property_readonly("vertex_count", &PrecubicalSet::vertexCount)
      .def_property_readonly("edge_count", &PrecubicalSet::edgeCount)
      .def("vertices",
           [](const PrecubicalSet& X) {
             std::vector<std::string> out;
             for (int v = 0; v < X.vertexCount(); ++v) out.push_back(X.vertexId(v));
             return out;
           })
      .def("loop_free", &PrecubicalSet::loopFree)
      .def("non_self_linked", [](const PrecubicalSet& X) { return is_non_self_linked(X); })
      .def("to_json", [](const PrecubicalSet& X) { return complex_to_json(X.toRaw()); });

  m.def("build_named", &named, py::arg("name"), py::arg("n") = 0);
  m.def("from_json", &fromJson);
  m.def("validate_json", [](const std::string& text) {
    ValidationReport rep = validate(complex_from_json(text));
    std::vector<std::pair<std::string, std::string>> vs;
    for (const auto& v : rep.violations) vs.push_back({v.cell, v.what});
    return py::make_tuple(rep.pass, vs);
  });
  m.def("product", [](PyComplexPtr a, PyComplexPtr b) -> PyComplexPtr {
    return std::make_shared<PrecubicalSet>(product(*a, *b).toRaw());
  });

  py::class_<AdmissibleMap>(m, "AdmissibleMap")
      .def("is_identity", &AdmissibleMap::isIdentity)
      .def("to_json", &map_to_json);

  py::class_<PyAnalysis>(m, "Analysis")
      .def(py::init<PyComplexPtr, std::optional<int>, int>(), py::arg("complex"),
           py::arg("max_len") = std::nullopt, py::arg("workers") = 1)
      .def_property_readonly("name",
                             [](PyAnalysis& a) { return a.an->complex().name(); })
      .def("class_count",
           [](PyAnalysis& a, const std::string& x, const std::string& y) {
             const PrecubicalSet& X = a.an->complex();
             int xr = X.vertexRank(x), yr = X.vertexRank(y);
             if (xr < 0 || yr < 0) throw ParameterError("unknown vertex");
             return a.an->table().hasPair(xr, yr) ? a.an->table().pair(xr, yr).classCount : 0;
           })
      .def("class_report", [](PyAnalysis& a) { return class_report(a.an->table()); })
      .def("reachable_pairs",
           [](PyAnalysis& a) { return (int)a.an->table().entries().size(); })
      .def("identity", [](PyAnalysis& a) { return a.an->identity(); })
      .def("constant_map",
           [](PyAnalysis& a, const std::string& v) {
             int vr = a.an->complex().vertexRank(v);
             if (vr < 0) throw ParameterError("unknown vertex");
             return constant_map(a.an->complexPtr(), a.an->table(), vr);
           })
      .def("endomap_count",
           [](PyAnalysis& a, long budget) { return (long)a.an->endomaps(budget).size(); },
           py::arg("budget") = 5'000'000)
      .def("pair_components", [](PyAnalysis& a) {
        PairComponentCategory C = pair_components(*a.an);
        return py::make_tuple(C.objectCount, C.signatures);
      })
      .def("directed_tc",
           [](PyAnalysis& a, int maxK) {
             DtcResult r = directed_tc(a.an->table(), maxK);
             return r.found ? py::cast(r.k) : py::cast<py::none>(py::none());
           },
           py::arg("max_k") = 4);

  m.def("make_map", &makeMap, py::arg("source"), py::arg("target"), py::arg("vertices"));
  m.def("check_psp", [](const AdmissibleMap& f, PyAnalysis& src, PyAnalysis& tgt) {
    return check_psp(f, src.an->table(), tgt.an->table()).psp;
  });
  m.def(
      "check_inessential",
      [](const AdmissibleMap& f, const std::string& alpha, PyAnalysis& an, int depth,
         long budget) {
        return verdictName(
            check_inessential(f, alpha_from_string(alpha), depth, *an.an, budget).verdict);
      },
      py::arg("map"), py::arg("alpha"), py::arg("analysis"), py::arg("depth") = 2,
      py::arg("budget") = 5'000'000);
  m.def(
      "check_rather_inessential",
      [](const AdmissibleMap& f, const std::string& alpha, PyAnalysis& an, long budget) {
        return verdictName(
            check_rather_inessential(f, alpha_from_string(alpha), *an.an, budget).verdict);
      },
      py::arg("map"), py::arg("alpha"), py::arg("analysis"), py::arg("budget") = 5'000'000);
  m.def(
      "check_dhe",
      [](const AdmissibleMap& f, const std::string& alpha, PyAnalysis& src, PyAnalysis& tgt,
         long budget) {
        return verdictName(
            check_dhe(f, alpha_from_string(alpha), *src.an, *tgt.an, budget).verdict);
      },
      py::arg("map"), py::arg("alpha"), py::arg("source"), py::arg("target"),
      py::arg("budget") = 5'000'000);
  m.def("compare_components", [](PyAnalysis& a, PyAnalysis& b) {
    return compare_categories(pair_components(*a.an), pair_components(*b.an)) ==
                   CompareVerdict::Compatible
               ? "compatible"
               : "distinguished";
  });
}
