#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdslab/covering.hpp"
#include "mdslab/criteria.hpp"
#include "mdslab/equiv.hpp"
#include "mdslab/extend.hpp"
#include "mdslab/reproduce.hpp"

namespace py = pybind11;
using namespace mdslab;

namespace {

LinearCode code_from_rows(const Field& f, const std::vector<Vec>& rows) {
  return LinearCode::from_generator(Matrix::from_rows(f, rows));
}

py::dict class_dict(const CodeClass& c) {
  py::dict d;
  d["tag"] = to_string(c.tag);
  d["d"] = c.d;
  d["d_dual"] = c.d_dual;
  return d;
}

py::dict witness_dict(const EquivWitness& w) {
  py::dict d;
  d["found"] = w.found;
  d["perm"] = w.perm;
  d["scale"] = w.scale;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mdslab, m) {
  m.doc() = "MDS and near-MDS codes, deep holes and extensions";

  py::register_exception<Error>(m, "MdslabError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t m) { return Field::make(p, m); }), py::arg("p"), py::arg("m") = 1)
      .def_static("parse", &Field::parse)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("m", &Field::m)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("token", &Field::token)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("mul", &Field::mul)
      .def("neg", &Field::neg)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("__repr__", &Field::token);

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&code_from_rows), py::arg("field"), py::arg("rows"))
      .def_static("parse_text", &LinearCode::parse_text)
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("field", &LinearCode::field)
      .def_property_readonly("generator", [](const LinearCode& c) { return c.generator().to_rows(); })
      .def("encode", [](const LinearCode& c, const Vec& msg) { return c.encode(msg); })
      .def("contains", [](const LinearCode& c, const Vec& w) { return c.contains(w); })
      .def("to_text", &LinearCode::to_text)
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; });

  m.def("min_distance", &min_distance);
  m.def("weight_distribution", &weight_distribution);
  m.def("dual", &dual);
  m.def("classify", [](const LinearCode& c) { return class_dict(classify(c)); });
  m.def("shorten", &shorten);
  m.def("puncture", &puncture);
  m.def("schur_square", &schur_square);

  m.def("grs", [](const Field& f, const Vec& S, const Vec& v, std::size_t k) { return grs(EvalConfig::make(f, S, v), k); });
  m.def("egrs", [](const Field& f, const Vec& S, const Vec& v, std::size_t k) { return egrs(EvalConfig::make(f, S, v), k); });
  m.def("esgrs", [](const Field& f, const Vec& S, const Vec& v, std::size_t k) { return esgrs(EvalConfig::make(f, S, v), k); });
  m.def("roth_lempel", &roth_lempel, py::arg("field"), py::arg("S"), py::arg("k"), py::arg("delta"));
  m.def("is_zero_sum_free", &is_zero_sum_free);

  m.def("covering_radius", [](const LinearCode& c) { return covering_radius(c); });
  m.def("error_distance", [](const LinearCode& c, const Vec& u) { return SyndromeTable::build(c).error_distance(u); });
  m.def(
      "deep_holes",
      [](const LinearCode& c, std::uint64_t limit) {
        std::vector<Vec> out;
        for (auto& h : enumerate_deep_holes(c, limit)) out.push_back(h.vector);
        return out;
      },
      py::arg("code"), py::arg("limit") = 100);

  m.def("class1_is_deep_hole",
        [](const Field& f, const Vec& S, const Vec& v, std::size_t k, Elem g_km1, const Vec& fc, Elem u) {
          return class1_is_deep_hole(EvalConfig::make(f, S, v), k, g_km1, Poly(f, fc), u);
        });
  m.def("class2_is_deep_hole",
        [](const Field& f, const Vec& S, const Vec& v, std::size_t k, Elem g_kp1, Elem g_km1, const Vec& fc, Elem u) {
          return class2_is_deep_hole(EvalConfig::make(f, S, v), k, g_kp1, g_km1, Poly(f, fc), u);
        });
  m.def("forbidden_set", [](const Field& f, const Vec& S, const Vec& v, std::size_t k, Elem g_kp1, Elem c) {
    auto fs = forbidden_set(EvalConfig::make(f, S, v), k, g_kp1, c);
    return std::vector<Elem>(fs.L.begin(), fs.L.end());
  });

  m.def("extend_by_deep_hole", [](const LinearCode& c, const Vec& u) {
    auto r = extend_by_deep_hole(c, u);
    py::dict d;
    d["extended"] = r.extended;
    d["base_class"] = class_dict(r.base_class);
    d["extended_class"] = class_dict(r.extended_class);
    d["hypotheses_hold"] = r.hypotheses_hold;
    d["nongrs_inherited"] = r.nongrs_inherited;
    d["warnings"] = r.warnings;
    return d;
  });
  m.def("second_kind_extend", [](const LinearCode& c, const Vec& u) { return second_kind_extend(c, u); });
  m.def("mkz_check", [](const LinearCode& c, const Vec& u) {
    auto r = mkz_check(c, u);
    py::dict d;
    d["cond1"] = r.cond1;
    d["cond2"] = r.cond2;
    d["ops_count"] = r.ops_count;
    d["verdict"] = r.verdict;
    return d;
  });
  m.def(
      "mkz_cost_bound",
      [](std::size_t n, std::size_t k, std::uint64_t q, bool dual_path, bool exhaustive) {
        return py::int_(py::str(mkz_cost_bound(n, k, q, dual_path, exhaustive).str()));
      },
      py::arg("n"), py::arg("k"), py::arg("q"), py::arg("dual_path") = false, py::arg("exhaustive") = true);

  m.def("monomial_equivalent", [](const LinearCode& a, const LinearCode& b) {
    return witness_dict(monomial_equivalent(a, b));
  });
  m.def("equivalent_to_some_grs", [](const LinearCode& c) -> py::object {
    auto w = equivalent_to_some_grs(c);
    if (!w) return py::none();
    py::dict d = witness_dict(w->map);
    d["extended"] = w->extended;
    d["S"] = w->S;
    return d;
  });
  m.def("square_code_distinguisher", &square_code_distinguisher);

  m.def("reproduce", [](const std::string& id) {
    auto r = reproduce(id);
    py::list rows;
    for (auto& o : r.outcomes) rows.append(py::make_tuple(o.claim, o.expected, o.computed, o.pass));
    return rows;
  });
  m.def("reproduce_ids", &reproduce_ids);
}
