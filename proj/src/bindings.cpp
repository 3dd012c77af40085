#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellwit/bisep.hpp"
#include "bellwit/io.hpp"
#include "bellwit/optimize.hpp"
#include "bellwit/witness.hpp"

namespace py = pybind11;
using namespace bellwit;

PYBIND11_MODULE(_bellwit, m) {
  m.doc() = "Multisetting tripartite Bell inequalities: construction, bounds, "
            "see-saw optimization and entanglement certification";

  py::register_exception<invalid_parameter>(m, "InvalidParameterError", PyExc_ValueError);
  py::register_exception<unsupported_family>(m, "UnsupportedFamilyError", PyExc_ValueError);
  py::register_exception<budget_exceeded>(m, "BudgetExceededError", PyExc_ValueError);
  py::register_exception<not_available>(m, "NotAvailableError", PyExc_ValueError);
  py::register_exception<not_mod_circulant>(m, "NotModCirculantError", PyExc_ValueError);
  py::register_exception<invalid_data>(m, "InvalidDataError", PyExc_ValueError);
  py::register_exception<invalid_state>(m, "InvalidStateError", PyExc_ValueError);

  py::enum_<Family>(m, "Family")
      .value("Cosine", Family::Cosine)
      .value("Parity", Family::Parity)
      .value("Custom", Family::Custom);
  py::enum_<Party>(m, "Party")
      .value("A", Party::A)
      .value("B", Party::B)
      .value("C", Party::C);
  py::enum_<Verdict>(m, "Verdict")
      .value("GenuineTripartiteEntanglement", Verdict::GenuineTripartiteEntanglement)
      .value("Inconclusive", Verdict::Inconclusive);
  py::enum_<BoundKind>(m, "BoundKind")
      .value("Closed", BoundKind::Closed)
      .value("BruteForce", BoundKind::BruteForce);

  py::class_<BellTensor>(m, "BellTensor")
      .def(py::init<>())
      .def_readwrite("m", &BellTensor::m)
      .def_readwrite("family", &BellTensor::family)
      .def_readwrite("delta", &BellTensor::delta)
      .def_readwrite("coeffs", &BellTensor::coeffs)
      .def("at", py::overload_cast<int, int, int>(&BellTensor::at, py::const_))
      .def("to_json", [](const BellTensor& t) { return io::dump(io::tensor_to_json(t)); });

  py::class_<MeasurementAngles>(m, "MeasurementAngles")
      .def(py::init<>())
      .def_readwrite("m", &MeasurementAngles::m)
      .def_readwrite("theta", &MeasurementAngles::theta)
      .def_readwrite("phi", &MeasurementAngles::phi)
      .def("normalize", &MeasurementAngles::normalize);

  py::class_<CorrelationTensor>(m, "CorrelationTensor")
      .def(py::init<>())
      .def_readwrite("m", &CorrelationTensor::m)
      .def_readwrite("values", &CorrelationTensor::values)
      .def("at", py::overload_cast<int, int, int>(&CorrelationTensor::at, py::const_));

  py::class_<StateSpec>(m, "StateSpec")
      .def(py::init<double>(), py::arg("visibility") = 1.0)
      .def_readwrite("visibility", &StateSpec::visibility);

  py::class_<ReducedMatrix>(m, "ReducedMatrix")
      .def(py::init<>())
      .def_readwrite("m", &ReducedMatrix::m)
      .def_readwrite("entries", &ReducedMatrix::entries)
      .def_readwrite("signs", &ReducedMatrix::signs)
      .def_readwrite("party", &ReducedMatrix::party)
      .def("at", py::overload_cast<int, int>(&ReducedMatrix::at, py::const_));

  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
      .def_readonly("omega", &SpectrumResult::omega);

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("value", &BruteForceResult::value)
      .def_readonly("best_signs", &BruteForceResult::best_signs)
      .def_readonly("party", &BruteForceResult::party);

  py::class_<OptResult>(m, "OptResult")
      .def_readonly("value", &OptResult::value)
      .def_readonly("angles", &OptResult::angles)
      .def_readonly("state", &OptResult::state)
      .def_readonly("iterations", &OptResult::iterations)
      .def_readonly("converged", &OptResult::converged)
      .def_readonly("restarts_used", &OptResult::restarts_used);

  py::class_<CertificationResult>(m, "CertificationResult")
      .def_readonly("bell_value", &CertificationResult::bell_value)
      .def_readonly("bisep_bound", &CertificationResult::bisep_bound)
      .def_readonly("bound_kind", &CertificationResult::bound_kind)
      .def_readonly("margin", &CertificationResult::margin)
      .def_readonly("verdict", &CertificationResult::verdict)
      .def_readonly("ns_violation", &CertificationResult::ns_violation);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("m", &SweepRow::m)
      .def_readonly("Q_lower", &SweepRow::q_lower)
      .def_readonly("B", &SweepRow::b)
      .def_readonly("V_threshold", &SweepRow::v_threshold);

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("m", &BoundsReport::m)
      .def_readonly("family", &BoundsReport::family)
      .def_readonly("Q_lower", &BoundsReport::q_lower)
      .def_readonly("B_closed", &BoundsReport::b_closed)
      .def_readonly("B_bruteforce", &BoundsReport::b_bruteforce)
      .def_readonly("B_planar_lower", &BoundsReport::b_planar_lower)
      .def_readonly("NS_limit", &BoundsReport::ns_limit)
      .def_readonly("V_threshold", &BoundsReport::v_threshold)
      .def_readonly("best_signs", &BoundsReport::best_signs)
      .def_readonly("party", &BoundsReport::party)
      .def("to_json", [](const BoundsReport& r) { return io::dump(io::bounds_report_to_json(r)); });

  // tensor
  m.def("build_cosine_tensor", &build_cosine_tensor, py::arg("m"), py::arg("delta") = -0.5);
  m.def("build_parity_tensor", &build_parity_tensor, py::arg("m"));
  m.def("nonzero_count", &nonzero_count);
  m.def("slice_structure_check", &slice_structure_check);

  // quantum
  m.def("ghz_correlators", &ghz_correlators, py::arg("angles"), py::arg("state") = StateSpec{1.0});
  m.def("canonical_angles", &canonical_angles);
  m.def("bell_value", &bell_value);
  m.def("quantum_lower_bound", &quantum_lower_bound);
  m.def("no_signalling_limit", &no_signalling_limit);

  // bisep
  m.def("reduced_matrix", &reduced_matrix, py::arg("tensor"), py::arg("party"), py::arg("signs"));
  m.def("is_modified_circulant", &is_modified_circulant);
  m.def("mod_circulant_spectrum", &mod_circulant_spectrum);
  m.def("singular_upper_bound", &singular_upper_bound);
  m.def("biseparable_upper_bruteforce", &biseparable_upper_bruteforce,
        py::call_guard<py::gil_scoped_release>());
  m.def("biseparable_closed", &biseparable_closed);
  m.def("planar_vector_lower_bound", &planar_vector_lower_bound, py::arg("tensor"),
        py::arg("signs"));

  // optimize
  m.def("seesaw_quantum_max", &seesaw_quantum_max, py::arg("tensor"), py::arg("restarts") = 20,
        py::arg("seed") = 0, py::arg("tol") = 1e-9, py::call_guard<py::gil_scoped_release>());
  m.def("evaluate_operator", &evaluate_operator, py::arg("tensor"), py::arg("angles"),
        py::arg("state"));
  m.def("correlators_from_state", &correlators_from_state, py::arg("angles"), py::arg("state"));

  // witness
  m.def("certify", &certify, py::arg("tensor"), py::arg("data"), py::arg("tol") = 1e-9);
  m.def("threshold_visibility",
        py::overload_cast<const BellTensor&>(&threshold_visibility));
  m.def("threshold_visibility",
        py::overload_cast<Family, long long>(&threshold_visibility), py::arg("family"),
        py::arg("m"));
  m.def("sweep", &sweep, py::arg("family"), py::arg("m_lo"), py::arg("m_hi"),
        py::arg("delta") = -0.5);
  m.def("simulate_noisy_ghz", &simulate_noisy_ghz, py::arg("tensor"), py::arg("visibility"));
  m.def("compute_bounds", &compute_bounds, py::arg("tensor"), py::arg("skip_bruteforce") = false,
        py::call_guard<py::gil_scoped_release>());

  // io
  m.def("tensor_from_json_file",
        [](const std::string& path) { return io::tensor_from_json(io::load_json_file(path)); });
  m.def("correlations_from_json_file", [](const std::string& path) {
    return io::correlations_from_json(io::load_json_file(path));
  });
}
