#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goa2/commands.hpp"

namespace py = pybind11;
using namespace goa2;

namespace {

py::dict json_to_py(const Json& j) { return py::dict(py::module_::import("json").attr("loads")(j.dump())); }

CampaignConfig make_config(const std::string& key, int samples, std::uint64_t seed,
                           const std::vector<std::string>& phi,
                           const std::vector<double>& thetas, int split, int jobs) {
  CampaignConfig cfg;
  cfg.space_key = key;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.phi_sources = phi;
  cfg.thetas = thetas;
  cfg.split = split;
  cfg.jobs = jobs;
  return cfg;
}

Params make_params(int n, int r) {
  Params p;
  if (n >= 0) p["n"] = n;
  if (r >= 0) p["r"] = r;
  return p;
}

}  // namespace

PYBIND11_MODULE(_goa2, m) {
  m.doc() = "Feasibility campaigns for deformed metrics on compact coset spaces";

  py::register_exception<UnknownKeyError>(m, "UnknownKeyError");
  py::register_exception<NotConstructedError>(m, "NotConstructedError");
  py::register_exception<PhiParseError>(m, "PhiParseError");
  py::register_exception<PhiDomainError>(m, "PhiDomainError");
  py::register_exception<ContractError>(m, "ContractError");
  py::register_exception<ConstructionError>(m, "ConstructionError");

  m.def("list_catalog", [] {
    py::list out;
    for (const SpaceDescriptor& d : list_catalog()) {
      py::dict entry;
      entry["key"] = d.key;
      entry["g"] = d.g_name;
      entry["k"] = d.k_name;
      entry["h"] = d.h_name;
      entry["constructed"] = d.constructed;
      entry["variant"] = d.variant;
      entry["kind"] = d.kind == SpaceDescriptor::Kind::Wallach ? "wallach" : "triple";
      entry["note"] = d.note;
      py::list params;
      for (const ParamSpec& p : d.params) {
        py::dict spec;
        spec["name"] = p.name;
        spec["min"] = p.min_value;
        spec["default"] = p.default_value;
        params.append(spec);
      }
      entry["params"] = params;
      out.append(entry);
    }
    return out;
  });

  m.def(
      "certify",
      [](const std::string& key, int n, int r) {
        return json_to_py(run_certify(key, make_params(n, r), "python").report_file);
      },
      py::arg("key"), py::arg("n") = -1, py::arg("r") = -1);

  m.def(
      "run_campaign",
      [](const std::string& key, const std::string& mode, int samples, std::uint64_t seed,
         const std::vector<std::string>& phi, const std::vector<double>& thetas, int split,
         int jobs, int n, int r) {
        const VerifyResult result = run_verify(
            key, mode, make_config(key, samples, seed, phi, thetas, split, jobs),
            make_params(n, r), "python");
        py::dict out = json_to_py(result.report_file);
        out["exit_code"] = result.exit_code;
        return out;
      },
      py::arg("key"), py::arg("mode"), py::arg("samples") = 200, py::arg("seed") = 42,
      py::arg("phi") = std::vector<std::string>{}, py::arg("thetas") = std::vector<double>{},
      py::arg("split") = 3, py::arg("jobs") = 1, py::arg("n") = -1, py::arg("r") = -1);

  m.def("summary_table", [](int samples, std::uint64_t seed, int jobs) {
    Tolerances tol;
    const Table1Result result = run_table1(samples, seed, jobs, tol);
    py::dict out;
    out["markdown"] = result.markdown;
    out["exit_code"] = result.exit_code;
    py::dict rows;
    for (const auto& [key, report] : result.rows) rows[py::str(key)] = json_to_py(to_json(report));
    out["rows"] = rows;
    return out;
  }, py::arg("samples") = 100, py::arg("seed") = 42, py::arg("jobs") = 1);

  py::class_<PhiFunction>(m, "PhiFunction")
      .def_static("parse", &PhiFunction::parse, py::arg("text"))
      .def_static("constant", &PhiFunction::constant, py::arg("c"))
      .def_static("riemannian", &PhiFunction::riemannian, py::arg("a"), py::arg("b"))
      .def("__call__", &PhiFunction::eval, py::arg("s"),
           "Returns the pair (phi(s), phi'(s)).")
      .def_property_readonly("source", &PhiFunction::source);

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("feasible", &FeasibilityReport::feasible)
      .def_readonly("residual", &FeasibilityReport::residual)
      .def_readonly("rank", &FeasibilityReport::rank)
      .def_readonly("rhs_norm", &FeasibilityReport::rhs_norm)
      .def_readonly("u", &FeasibilityReport::u)
      .def("__repr__", [](const FeasibilityReport& r) {
        return "<FeasibilityReport feasible=" + std::string(r.feasible ? "True" : "False") +
               " residual=" + std::to_string(r.residual) + ">";
      });

  py::class_<DecomposedSpace>(m, "Space")
      .def_property_readonly("label", &DecomposedSpace::label)
      .def_property_readonly("is_triple", &DecomposedSpace::is_triple)
      .def_property_readonly("dim", [](const DecomposedSpace& s) { return s.algebra()->dim(); })
      .def_property_readonly("dim_h", [](const DecomposedSpace& s) { return s.h().dim(); })
      .def_property_readonly("dim_m1", [](const DecomposedSpace& s) { return s.m1().dim(); })
      .def_property_readonly("dim_m2", [](const DecomposedSpace& s) { return s.m2().dim(); })
      .def("h_basis", [](const DecomposedSpace& s) { return s.h().basis(); })
      .def("m1_basis", [](const DecomposedSpace& s) { return s.m1().basis(); })
      .def("m2_basis", [](const DecomposedSpace& s) { return s.m2().basis(); })
      .def("bracket",
           [](const DecomposedSpace& s, const Vector& x, const Vector& y) {
             return s.algebra()->bracket(x, y);
           })
      .def("solve_pair_condition",
           [](const DecomposedSpace& s, const Vector& v_f, const Vector& v_b) {
             return solve_triple_condition(s, v_f, v_b);
           })
      .def("solve_weighted_condition",
           [](const DecomposedSpace& s, const Vector& v1, const Vector& v2, double c1,
              double c2) { return solve_weighted_condition(s, v1, v2, c1, c2); })
      .def("solve_geodesic",
           [](const DecomposedSpace& s, const PhiFunction& phi, const Vector& v) {
             NormContext ctx(s, phi);
             auto [cand, report] = solve_geodesic_vector(ctx, v);
             const double check = report.feasible ? check_geodesic_vector(ctx, cand) : -1.0;
             py::dict out;
             out["u"] = cand.u;
             out["theta"] = cand.theta;
             out["boundary"] = cand.boundary;
             out["residual"] = report.residual;
             out["feasible"] = report.feasible;
             out["checker_residual"] = check;
             return out;
           })
      .def("norm_value", [](const DecomposedSpace& s, const PhiFunction& phi, const Vector& v) {
        return NormContext(s, phi).norm_value(v);
      });

  m.def("build_space",
        [](const std::string& key, int n, int r) { return build_space(key, make_params(n, r)); },
        py::arg("key"), py::arg("n") = -1, py::arg("r") = -1);
  m.def("wallach_metric_split",
        [](const std::string& key, int split) { return build_wallach(key).metric_split(split); },
        py::arg("key"), py::arg("split") = 3);
  m.def("wallach_derived_triple",
        [](const std::string& key, int split) {
          if (split < 1 || split > 3) throw ContractError("split must be 1..3");
          return build_wallach(key).derived_triples[split - 1];
        },
        py::arg("key"), py::arg("split") = 3);
}
