#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dtqw/cli.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/holonomy.hpp"
#include "dtqw/position_sim.hpp"
#include "dtqw/topology.hpp"
#include "dtqw/walk_models.hpp"
#include "dtqw/zak.hpp"

namespace py = pybind11;
using namespace dtqw;

namespace {

using Matrix = std::vector<std::vector<cplx>>;

Matrix to_nested(const Complex2x2& m) { return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; }

Chirality parse_chirality(const std::string& s) {
  if (s == "+" || s == "plus") return Chirality::plus;
  if (s == "-" || s == "minus") return Chirality::minus;
  throw std::invalid_argument("chirality must be plus or minus");
}

py::dict distribution_dict(const Distribution& d) {
  py::dict out;
  out["min_x"] = d.min_x;
  out["max_x"] = d.max_x();
  out["p"] = d.p;
  out["step_count"] = d.step_count;
  return out;
}

Distribution distribution_from(int min_x, std::vector<double> p) { return Distribution{min_x, std::move(p), 0}; }

}  // namespace

PYBIND11_MODULE(_dtqw, m) {
  m.doc() = "Discrete-time quantum walk spectra, topology and geometry";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::enum_<Family>(m, "Family")
      .value("standard", Family::standard)
      .value("split_step", Family::split_step)
      .value("non_commuting", Family::non_commuting);
  py::enum_<Band>(m, "Band").value("plus", Band::plus).value("minus", Band::minus);

  m.def("parse_family", [](const std::string& s) { return parse_family(s); });

  py::class_<WalkModel>(m, "WalkModel")
      .def_static("standard", &WalkModel::standard, py::arg("theta"))
      .def_static("split_step", &WalkModel::split_step, py::arg("theta1"), py::arg("theta2"))
      .def_static("non_commuting", &WalkModel::non_commuting, py::arg("theta"), py::arg("phi"))
      .def_static("from_family", &WalkModel::from_family, py::arg("family"), py::arg("angle1"),
                  py::arg("angle2") = 0.0)
      .def_property_readonly("family", &WalkModel::family)
      .def_property_readonly("angle1", &WalkModel::angle1)
      .def_property_readonly("angle2", &WalkModel::angle2)
      .def("__repr__", &WalkModel::describe);

  m.def("momentum_unitary", [](const WalkModel& w, double k) { return to_nested(momentum_unitary(w, k)); },
        py::arg("model"), py::arg("k"));
  m.def("quasi_energy", &quasi_energy, py::arg("model"), py::arg("k"));
  m.def("gap", &gap, py::arg("model"), py::arg("k"));
  m.def(
      "bloch_vector",
      [](const WalkModel& w, double k) {
        const BlochVector b = bloch_vector(w, k);
        return std::array<double, 3>{b.nx, b.ny, b.nz};
      },
      py::arg("model"), py::arg("k"));

  m.def(
      "find_dirac_points",
      [](Family f, double tol, int resolution) {
        DiracSearchOptions o;
        o.refine_tol = tol;
        o.coarse_resolution = resolution;
        const DiracPointSet s = find_dirac_points(f, o);
        py::list points;
        for (const DiracPoint& p : s.points) {
          py::dict d;
          d["angle1"] = p.angle1;
          d["angle2"] = p.angle2;
          d["k_star"] = p.k_star;
          d["energy"] = p.energy;
          points.append(d);
        }
        py::dict out;
        out["points"] = points;
        out["continuous_boundary"] = s.continuous_boundary;
        return out;
      },
      py::arg("family"), py::arg("tol") = 1e-8, py::arg("resolution") = 721);
  m.def("winding_number", &winding_number, py::arg("model"), py::arg("k_samples") = 1024);

  m.def(
      "zak_phase",
      [](const WalkModel& w, Band b, double k_origin, int n_points) {
        return zak_numeric(w, b, k_origin, n_points).phase;
      },
      py::arg("model"), py::arg("band"), py::arg("k_origin") = 0.0, py::arg("n_points") = 2048);
  m.def("zak_difference",
        [](const WalkModel& a, const WalkModel& b, Band band, double k_origin) {
          return zak_difference(a, b, band, k_origin);
        },
        py::arg("a"), py::arg("b"), py::arg("band"), py::arg("k_origin") = 0.0);

  m.def(
      "evolve_distribution",
      [](const WalkModel& w, int n, const std::string& c) {
        return distribution_dict(distribution(evolve(initial_state(parse_chirality(c)), w, n)));
      },
      py::arg("model"), py::arg("steps"), py::arg("chirality") = "plus");
  m.def(
      "oracle_distribution",
      [](const WalkModel& w, int n, const std::string& c) {
        return distribution_dict(momentum_oracle(initial_state(parse_chirality(c)), w, n));
      },
      py::arg("model"), py::arg("steps"), py::arg("chirality") = "plus");
  m.def(
      "similarity",
      [](int min_x, std::vector<double> p, std::vector<double> q) {
        return similarity(distribution_from(min_x, std::move(p)), distribution_from(min_x, std::move(q)));
      },
      py::arg("min_x"), py::arg("p"), py::arg("q"));

  m.def(
      "latitude_holonomy",
      [](double theta0, int steps) {
        const SphereCurve loop = SphereCurve::latitude(theta0);
        const Vec3 e_theta{std::cos(theta0), 0.0, -std::sin(theta0)};
        const TransportResult r = parallel_transport(loop, TangentVector(e_theta, loop.position(0.0)), steps);
        return py::make_tuple(r.rotation_angle, r.norm_drift);
      },
      py::arg("theta0"), py::arg("steps") = 100000);
  m.def(
      "quantum_geometric_tensor",
      [](double theta, double phi, const std::string& state, double h) {
        const SpinorFamily fam = state == "minus" ? SpinorFamily(spin_half_minus) : SpinorFamily(spin_half_plus);
        const GeometricTensor t = quantum_geometric_tensor(fam, theta, phi, h);
        return py::make_tuple(t.g, t.V);
      },
      py::arg("theta"), py::arg("phi"), py::arg("state") = "plus", py::arg("step") = 1e-4);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli_dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
