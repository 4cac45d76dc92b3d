#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitmat/bigint.hpp"
#include "orbitmat/errors.hpp"
#include "orbitmat/function_spec.hpp"
#include "orbitmat/local_function.hpp"
#include "orbitmat/matrix.hpp"
#include "orbitmat/oracle.hpp"
#include "orbitmat/orbit.hpp"
#include "orbitmat/report.hpp"
#include "orbitmat/svg.hpp"

namespace py = pybind11;

namespace {

using orbitmat::index_t;

const char* kind_name(orbitmat::FunctionSpec::Kind kind) {
  using Kind = orbitmat::FunctionSpec::Kind;
  switch (kind) {
    case Kind::Shift: return "shift";
    case Kind::NextPrime: return "nextprime";
    case Kind::CollatzVariant: return "collatz";
    case Kind::ChapmanPsi: return "chapman";
    case Kind::Rcwa: return "rcwa";
    case Kind::Table: return "table";
  }
  return "?";
}

// 1-based internal arrays -> plain python lists (index i holds x = i+1).
std::vector<index_t> strip_index0(const std::vector<index_t>& v) {
  return {v.begin() + 1, v.end()};
}

py::object bigint_to_py(const orbitmat::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.to_string());
}

orbitmat::DenseIntMatrix dense_from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const auto n = static_cast<index_t>(rows.size());
  orbitmat::DenseIntMatrix a(n);
  for (index_t i = 1; i <= n; ++i) {
    if (rows[i - 1].size() != rows.size()) {
      throw orbitmat::Error(orbitmat::ErrorCode::DimensionMismatch, "matrix rows must be square");
    }
    for (index_t j = 1; j <= n; ++j) a.at(i, j) = orbitmat::BigInt(rows[i - 1][j - 1]);
  }
  return a;
}

py::list dense_to_rows(const orbitmat::DenseIntMatrix& a) {
  py::list rows;
  for (index_t i = 1; i <= a.n(); ++i) {
    py::list row;
    for (index_t j = 1; j <= a.n(); ++j) row.append(bigint_to_py(a.at(i, j)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_orbitmat, m) {
  m.doc() = "Cycle indicators, height partitions, and sparse inverses for "
            "iterations of fixed-point-free integer functions";

  py::register_exception<orbitmat::Error>(m, "OrbitmatError");

  py::class_<orbitmat::FunctionSpec>(m, "FunctionSpec")
      .def_property_readonly("kind",
                             [](const orbitmat::FunctionSpec& s) { return kind_name(s.kind); })
      .def_readonly("text", &orbitmat::FunctionSpec::text)
      .def("__repr__", [](const orbitmat::FunctionSpec& s) {
        return "FunctionSpec(\"" + s.text + "\")";
      });

  py::class_<orbitmat::LocalFunction>(m, "LocalFunction")
      .def_property_readonly("n", &orbitmat::LocalFunction::n)
      .def_property_readonly("table",
                             [](const orbitmat::LocalFunction& lf) { return strip_index0(lf.raw()); })
      .def("value", &orbitmat::LocalFunction::value, py::arg("x"))
      .def("__call__", &orbitmat::LocalFunction::value, py::arg("x"));

  py::class_<orbitmat::CycleReport>(m, "CycleReport")
      .def_readonly("found", &orbitmat::CycleReport::found)
      .def_readonly("elements", &orbitmat::CycleReport::elements)
      .def_readonly("length_m", &orbitmat::CycleReport::length_m);

  py::class_<orbitmat::HeightProfile>(m, "HeightProfile")
      .def_property_readonly("heights",
                             [](const orbitmat::HeightProfile& p) { return strip_index0(p.heights); })
      .def_readonly("partition_pi", &orbitmat::HeightProfile::partition_pi)
      .def_readonly("degree_m", &orbitmat::HeightProfile::degree_m)
      .def("total_height", &orbitmat::HeightProfile::total_height);

  py::class_<orbitmat::OrbitDecomposition>(m, "OrbitDecomposition")
      .def_property_readonly("class_root",
                             [](const orbitmat::OrbitDecomposition& d) {
                               return strip_index0(d.class_root);
                             })
      .def_readonly("classes", &orbitmat::OrbitDecomposition::classes)
      .def_readonly("children", &orbitmat::OrbitDecomposition::children)
      .def_property_readonly("heights", [](const orbitmat::OrbitDecomposition& d) {
        return strip_index0(d.heights);
      });

  py::class_<orbitmat::PartialMapMatrix>(m, "PartialMapMatrix")
      .def_property_readonly("n", &orbitmat::PartialMapMatrix::n)
      .def_property_readonly("col_to_row",
                             [](const orbitmat::PartialMapMatrix& mat) {
                               return strip_index0(mat.raw());
                             })
      .def(py::self == py::self);

  py::class_<orbitmat::SparseSignMatrix>(m, "SparseSignMatrix")
      .def_readonly("n", &orbitmat::SparseSignMatrix::n)
      .def("nnz", &orbitmat::SparseSignMatrix::nnz)
      .def("entries",
           [](const orbitmat::SparseSignMatrix& mat) {
             std::vector<std::tuple<index_t, index_t, int>> out;
             for (index_t j = 1; j <= mat.n; ++j) {
               for (const auto& [row, value] : mat.columns[j - 1]) {
                 out.emplace_back(row, j, value);
               }
             }
             return out;
           })
      .def(py::self == py::self);

  py::class_<orbitmat::EigenvectorCertificate>(m, "EigenvectorCertificate")
      .def_readonly("support", &orbitmat::EigenvectorCertificate::support);

  m.def("parse_spec", [](const std::string& text) { return orbitmat::parse_spec(text); },
        py::arg("text"));
  m.def("eval", &orbitmat::eval, py::arg("spec"), py::arg("x"));
  m.def("localize", &orbitmat::localize, py::arg("spec"), py::arg("n"));
  m.def("cycle_threshold", &orbitmat::cycle_threshold, py::arg("cycle"));

  m.def("detect_cycle", &orbitmat::detect_cycle, py::arg("lf"));
  m.def("heights", &orbitmat::heights, py::arg("lf"));
  m.def("orbit", &orbitmat::orbit, py::arg("lf"), py::arg("x"));
  m.def("decompose", &orbitmat::decompose, py::arg("lf"));
  m.def("j_nk", &orbitmat::j_nk, py::arg("lf"), py::arg("k"));

  m.def("build_m", &orbitmat::build_m, py::arg("lf"));
  m.def("apply_basis", &orbitmat::apply_basis, py::arg("m"), py::arg("x"));
  m.def("power", &orbitmat::power, py::arg("m"), py::arg("k"));
  m.def("nnz", [](const orbitmat::PartialMapMatrix& mat) { return orbitmat::nnz(mat); },
        py::arg("m"));
  m.def("intersect_count", &orbitmat::intersect_count, py::arg("a"), py::arg("b"));
  m.def("nilpotency_degree", &orbitmat::nilpotency_degree, py::arg("m"));
  m.def("build_ihat", &orbitmat::build_ihat, py::arg("lf"));
  m.def("inverse_via_orbits", &orbitmat::inverse_via_orbits, py::arg("lf"), py::arg("profile"));
  m.def("inverse_via_neumann", &orbitmat::inverse_via_neumann, py::arg("m"));
  m.def("cycle_eigenvector", &orbitmat::cycle_eigenvector, py::arg("m"), py::arg("cycle"));

  m.def("bareiss_det",
        [](const std::vector<std::vector<std::int64_t>>& rows) {
          return bigint_to_py(orbitmat::bareiss_det(dense_from_rows(rows)));
        },
        py::arg("rows"));
  m.def("verify_inverse", &orbitmat::verify_inverse, py::arg("ihat"), py::arg("inv"),
        py::arg("size_bound") = orbitmat::kDefaultOracleBound);
  m.def("en_product",
        [](index_t n, index_t a, index_t b, index_t c, index_t d) {
          return dense_to_rows(orbitmat::en_product(n, a, b, c, d));
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

  m.def("render_svg",
        [](const orbitmat::SparseSignMatrix& mat) { return orbitmat::render_svg(mat); },
        py::arg("m"));
  m.def("render_svg",
        [](const orbitmat::PartialMapMatrix& mat) { return orbitmat::render_svg(mat); },
        py::arg("m"));

  m.def("analyze",
        [](const std::string& spec_text, index_t n, bool verify, bool materialize_inverse,
           const std::string& json_path, const std::string& svg_ihat, const std::string& svg_inv,
           index_t oracle_bound) {
          orbitmat::AnalyzeOptions options;
          options.verify = verify;
          options.materialize_inverse = materialize_inverse;
          options.json_path = json_path;
          options.svg_ihat_path = svg_ihat;
          options.svg_inv_path = svg_inv;
          options.oracle_bound = oracle_bound;
          const auto report = orbitmat::run_analyze(spec_text, n, options);
          return py::module_::import("json").attr("loads")(orbitmat::report_to_json(report));
        },
        py::arg("spec_text"), py::arg("n"), py::arg("verify") = false,
        py::arg("materialize_inverse") = true, py::arg("json_path") = std::string(),
        py::arg("svg_ihat") = std::string(), py::arg("svg_inv") = std::string(),
        py::arg("oracle_bound") = orbitmat::kDefaultOracleBound);

  m.def("scan_for_cycle", &orbitmat::scan_for_cycle, py::arg("spec_text"), py::arg("n_min"),
        py::arg("n_max"));
}
