#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qrebound/bounds.hpp"
#include "qrebound/entropy.hpp"
#include "qrebound/figures.hpp"
#include "qrebound/harness.hpp"
#include "qrebound/norms.hpp"
#include "qrebound/serialization.hpp"
#include "qrebound/witnesses.hpp"

namespace py = pybind11;
using namespace qrebound;

namespace {

DensityMatrix state(const ComplexMatrix& m) { return DensityMatrix(HermitianMatrix(m)); }

py::tuple pair_tuple(const StatePair& p) {
  return py::make_tuple(p.rho.matrix().matrix(), p.sigma.matrix().matrix());
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounds on the quantum relative entropy";

  m.def("s_of_x", &s_of_x, py::arg("x"));
  m.def("relative_entropy",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma) {
          return relative_entropy(HermitianMatrix(rho), HermitianMatrix(sigma)).value();
        },
        py::arg("rho"), py::arg("sigma"), "Tr[rho(log rho - log sigma)]; inf on support leakage.");
  m.def("von_neumann_entropy",
        [](const ComplexMatrix& rho) { return von_neumann_entropy(state(rho)); }, py::arg("rho"));
  m.def("trace_distance",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma, bool half) {
          return half ? trace_distance_half(state(rho), state(sigma))
                      : trace_distance_full(state(rho), state(sigma));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("half") = true);
  m.def("rescaled_distance",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma, const std::string& norm) {
          return rescaled_distance(state(rho), state(sigma), NormKind::parse(norm));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("norm") = "trace");
  m.def("fidelity",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma) {
          return fidelity(state(rho), state(sigma));
        },
        py::arg("rho"), py::arg("sigma"));

  m.def("upper_bound_sharp_d2", &upper_bound_sharp_d2, py::arg("T"), py::arg("beta"));
  m.def("upper_bound_sharp_dgt2", &upper_bound_sharp_dgt2, py::arg("T"), py::arg("beta"));
  m.def("log_bound_value", &log_bound_value, py::arg("T_full"), py::arg("d"), py::arg("beta"));
  m.def("fannes_value", &fannes_value, py::arg("T_full"), py::arg("d"));
  m.def("bound_report",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma) {
          return json_to_py(report_to_json(bound_report(state(rho), state(sigma))));
        },
        py::arg("rho"), py::arg("sigma"),
        "Distances and bounds as a dict; infinite values are the string '+inf'.");

  m.def("witness_lower", [](double x, int d) { return pair_tuple(witness_lower(x, d)); },
        py::arg("x"), py::arg("d"));
  m.def("witness_upper",
        [](double t, double beta, int d, std::optional<int> j) {
          if (t <= beta) return pair_tuple(witness_upper_T_le_beta(t, beta, d));
          return pair_tuple(witness_upper_T_gt_beta(t, beta, d, j.value_or(0)));
        },
        py::arg("T"), py::arg("beta"), py::arg("d"), py::arg("J") = py::none());
  m.def("counterexample_bad_bound",
        [](double r) {
          const Counterexample c = counterexample_bad_bound(r);
          py::dict out;
          out["r"] = c.r;
          out["p"] = c.p;
          out["q"] = c.q;
          out["margin"] = c.margin;
          return out;
        },
        py::arg("r"));

  m.def("figure",
        [](int which, double beta) {
          const FigureTable t = which == 1 ? figure1() : which == 2 ? figure2(beta)
                              : which == 3 ? figure3(beta)
                                           : throw std::invalid_argument("figure must be 1, 2 or 3");
          return py::make_tuple(t.columns, t.rows);
        },
        py::arg("which"), py::arg("beta") = 0.1, "(columns, rows) of a figure table.");

  m.def("run_suite",
        [](std::uint64_t seed, long samples, std::vector<int> dims,
           std::vector<std::string> properties) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.samples_per_case = samples;
          cfg.dims = std::move(dims);
          cfg.properties = std::move(properties);
          cfg.validate();
          SuiteReport r;
          {
            py::gil_scoped_release release;
            r = run_suite(cfg);
          }
          return json_to_py(r.to_json());
        },
        py::arg("seed") = 42, py::arg("samples") = 100, py::arg("dims") = std::vector<int>{2, 3, 4, 5},
        py::arg("properties") = std::vector<std::string>{});
  m.def("property_names", &property_names);
}
