#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fraczee/dataset.hpp"
#include "fraczee/error.hpp"
#include "fraczee/fit.hpp"
#include "fraczee/monomial.hpp"
#include "fraczee/report.hpp"
#include "fraczee/rl_numeric.hpp"
#include "fraczee/specfun.hpp"
#include "fraczee/spectrum.hpp"
#include "fraczee/verify.hpp"

namespace py = pybind11;
using namespace fraczee;

namespace {

Axis to_axis(const std::string& name) {
  const auto a = axis_from_name(name);
  if (!a) throw py::value_error("axis must be one of x, y, z, t");
  return *a;
}

py::dict record_dict(const ParticleRecord& r) {
  py::dict d;
  d["name"] = r.name;
  d["L"] = r.L;
  d["M"] = r.M;
  d["mass_mev"] = r.mass_exp;
  d["status"] = r.status;
  d["group"] = std::string(to_string(r.group));
  return d;
}

ParticleRecord record_from(const py::handle& h) {
  const auto d = h.cast<py::dict>();
  ParticleRecord r;
  r.name = d["name"].cast<std::string>();
  r.L = d["L"].cast<unsigned>();
  r.M = d["M"].cast<unsigned>();
  r.mass_exp = d["mass_mev"].cast<double>();
  if (d.contains("status")) r.status = d["status"].cast<std::string>();
  if (d.contains("group")) {
    const auto g = group_from_string(d["group"].cast<std::string>());
    if (!g) throw py::value_error("unknown group");
    r.group = *g;
  }
  validate(r);
  return r;
}

std::vector<ParticleRecord> records_from(const py::object& obj) {
  if (obj.is_none()) return builtin_table();
  std::vector<ParticleRecord> out;
  for (const auto& h : obj) out.push_back(record_from(h));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional calculus kernels and the fractional Zeeman mass fit";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

  m.def("gamma", [](double x) { return fraczee::gamma(x); }, py::arg("x"));
  m.def("rgamma", &rgamma, py::arg("x"));
  m.def("frac_binomial", &frac_binomial, py::arg("alpha"), py::arg("k"));

  m.def(
      "derive",
      [](const std::string& expr, const std::string& axis, double order) {
        return rl_derive(parse_expr(expr), to_axis(axis), order).to_string();
      },
      py::arg("expr"), py::arg("axis"), py::arg("order"),
      "Riemann-Liouville derivative of a polynomial expression, rendered as text.");
  m.def(
      "evaluate",
      [](const std::string& expr, const std::map<std::string, double>& point) {
        Point p;
        for (const auto& [k, v] : point) p[to_axis(k)] = v;
        return eval(parse_expr(expr), p);
      },
      py::arg("expr"), py::arg("point"));
  m.def("rl_derivative_quad", &rl_derivative_quad, py::arg("f"), py::arg("alpha"),
        py::arg("x"), py::arg("nodes") = kDefaultQuadNodes);

  py::class_<FitParams>(m, "FitParams")
      .def(py::init<double, double, double, double>(), py::arg("alpha"), py::arg("m0"),
           py::arg("a0"), py::arg("b0"))
      .def_readwrite("alpha", &FitParams::alpha)
      .def_readwrite("m0", &FitParams::m0)
      .def_readwrite("a0", &FitParams::a0)
      .def_readwrite("b0", &FitParams::b0)
      .def("__repr__", [](const FitParams& p) {
        return "FitParams(alpha=" + std::to_string(p.alpha) + ", m0=" + std::to_string(p.m0) +
               ", a0=" + std::to_string(p.a0) + ", b0=" + std::to_string(p.b0) + ")";
      });
  m.attr("REFERENCE_PARAMS") = kReferenceParams;

  m.def("casimir_L2", &casimir_L2, py::arg("alpha"), py::arg("L"));
  m.def("casimir_Lz", &casimir_Lz, py::arg("alpha"), py::arg("M"), py::arg("sign") = 1);
  m.def(
      "mass",
      [](const FitParams& p, unsigned L, int M) { return mass(p, Multiplet{L, M}); },
      py::arg("params"), py::arg("L"), py::arg("M"));

  m.def("builtin_table", [] {
    py::list out;
    for (const auto& r : builtin_table()) out.append(record_dict(r));
    return out;
  });
  m.def(
      "objective",
      [](const FitParams& p, const py::object& records) {
        return objective(p, records_from(records));
      },
      py::arg("params"), py::arg("records") = py::none(),
      "r.m.s. percent deviation over the records (default: the builtin table).");
  m.def(
      "fit",
      [](const py::object& records, const std::vector<std::string>& groups,
         std::optional<std::pair<unsigned, unsigned>> l_range, unsigned starts,
         std::uint64_t seed) {
        FitConfig cfg;
        cfg.include_groups.clear();
        for (const auto& g : groups) {
          const auto gg = group_from_string(g);
          if (!gg) throw py::value_error("unknown group " + g);
          cfg.include_groups.insert(*gg);
        }
        cfg.l_range = l_range;
        cfg.starts = starts;
        cfg.seed = seed;
        const auto recs = records_from(records);
        FitResult r;
        {
          py::gil_scoped_release release;
          r = fit(recs, cfg);
        }
        py::dict d;
        d["params"] = r.params;
        d["rms_percent"] = r.rms_percent;
        d["mean_abs_percent"] = r.mean_abs_percent;
        d["evals"] = r.evals;
        d["converged"] = r.converged;
        py::list rows;
        for (const auto& p : r.per_particle) {
          py::dict row;
          row["name"] = p.name;
          row["L"] = p.L;
          row["M"] = p.M;
          row["E_exp"] = p.e_exp;
          row["E_th"] = p.e_th;
          row["dE_percent"] = p.delta_percent;
          rows.append(row);
        }
        d["per_particle"] = rows;
        d["json"] = fit_result_json(r);
        return d;
      },
      py::arg("records") = py::none(), py::arg("groups") = std::vector<std::string>{"baryon"},
      py::arg("l_range") = std::optional<std::pair<unsigned, unsigned>>{std::pair{3u, 9u}},
      py::arg("starts") = 32, py::arg("seed") = 42);

  m.def(
      "verify",
      [](const std::string& suite) {
        CheckReport r;
        if (suite == "quad") r = verify_quad();
        else if (suite == "zeeman-field") r = verify_zeeman_field();
        else if (suite == "connection") r = verify_connection();
        else if (suite == "commutators") r = verify_commutators();
        else if (suite == "spin-algebra") r = verify_spin_algebra();
        else if (suite == "all") r = verify_all();
        else throw py::value_error("unknown suite " + suite);
        return check_report_json(r);
      },
      py::arg("suite"), "Runs an identity suite and returns its JSON report.");
}
