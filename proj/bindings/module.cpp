#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynalg/cli.hpp"
#include "dynalg/dirac_oscillator.hpp"
#include "dynalg/dressed.hpp"
#include "dynalg/jaynes_cummings.hpp"
#include "dynalg/lattice.hpp"
#include "dynalg/operator.hpp"
#include "dynalg/ops.hpp"
#include "dynalg/report.hpp"
#include "dynalg/so4.hpp"
#include "dynalg/spaces.hpp"

namespace py = pybind11;
using namespace dynalg;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Truncated-space operator algebra for dressed two-level boson models";

  // --- spaces -----------------------------------------------------------
  py::class_<FockSpace>(m, "FockSpace")
      .def(py::init<int>(), py::arg("n_max"))
      .def_readonly("n_max", &FockSpace::n_max)
      .def("dim", &FockSpace::dim)
      .def("__repr__", [](const FockSpace& s) {
        return "FockSpace(n_max=" + std::to_string(s.n_max) + ")";
      });

  py::class_<CompositeSpace>(m, "CompositeSpace")
      .def(py::init([](const FockSpace& fock) { return CompositeSpace{fock}; }),
           py::arg("fock"))
      .def(py::init([](int n_max) { return CompositeSpace{FockSpace(n_max)}; }),
           py::arg("n_max"))
      .def_readonly("fock", &CompositeSpace::fock)
      .def("n_max", &CompositeSpace::n_max)
      .def("dim", &CompositeSpace::dim)
      .def("__repr__", [](const CompositeSpace& s) {
        return "CompositeSpace(n_max=" + std::to_string(s.n_max()) + ")";
      });

  // --- operators ----------------------------------------------------------
  py::class_<Operator>(m, "Operator")
      .def_property_readonly(
          "matrix", [](const Operator& op) -> Matrix { return op.matrix(); })
      .def_property_readonly("label", &Operator::label)
      .def("adjoint", &Operator::adjoint)
      .def("with_label", &Operator::with_label, py::arg("label"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self * Complex())
      .def(Complex() * py::self)
      .def("__repr__", [](const Operator& op) {
        return "<Operator '" + op.label() + "'>";
      });

  m.def("ladder_lowering", &ladder_lowering, py::arg("space"));
  m.def("ladder_raising", &ladder_raising, py::arg("space"));
  m.def("number_op", &number_op, py::arg("space"));
  m.def("position_momentum", &position_momentum, py::arg("space"),
        py::arg("m"), py::arg("omega"));
  m.def("pauli", py::overload_cast<int>(&pauli), py::arg("axis"),
        "Pauli matrix on the two-level factor; axis in {1,2,3}");
  m.def("spin_identity", &spin_identity);
  m.def("tensor", &tensor, py::arg("spin_op"), py::arg("mode_op"));
  m.def("block2", &block2, py::arg("upper_left"), py::arg("upper_right"),
        py::arg("lower_left"), py::arg("lower_right"));
  m.def("mode_identity", &mode_identity, py::arg("space"));
  m.def("composite_identity", &composite_identity, py::arg("space"));
  m.def("spin_rotation", &spin_rotation, py::arg("angle"));
  m.def("diag_function", &diag_function, py::arg("diagonal_op"),
        py::arg("fn"));
  m.def("hermitian_function", &hermitian_function, py::arg("op"),
        py::arg("fn"));
  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("dress", &dress, py::arg("w"), py::arg("op"));
  m.def("guard_projector",
        py::overload_cast<const CompositeSpace&, int>(&guard_projector),
        py::arg("space"), py::arg("guard"));
  m.def("restricted_residual",
        py::overload_cast<const Operator&, const Operator&, const Operator&>(
            &restricted_residual),
        py::arg("a"), py::arg("target"), py::arg("projector"));
  m.def("frobenius_norm", &frobenius_norm, py::arg("op"));
  m.def(
      "hermitian_eigensystem",
      [](const Operator& op) {
        Eigensystem sys = hermitian_eigensystem(op);
        return py::make_tuple(sys.values, sys.vectors);
      },
      py::arg("op"), "Ascending eigenvalues and eigenvector columns");

  // --- dressed families and defect analysis -----------------------------
  py::class_<DressedFamily>(m, "DressedFamily")
      .def_readonly("w", &DressedFamily::w)
      .def_readonly("number", &DressedFamily::number)
      .def_readonly("spin3", &DressedFamily::spin3)
      .def_readonly("lowering", &DressedFamily::lowering)
      .def_readonly("raising", &DressedFamily::raising)
      .def_readonly("spin_plus", &DressedFamily::spin_plus)
      .def_readonly("spin_minus", &DressedFamily::spin_minus);

  py::class_<LabeledBasis>(m, "LabeledBasis")
      .def_readonly("labels", &LabeledBasis::labels)
      .def_readonly("vectors", &LabeledBasis::vectors)
      .def("has_state", &LabeledBasis::has_state, py::arg("branch"),
           py::arg("n"))
      .def("state", &LabeledBasis::state, py::arg("branch"), py::arg("n"));

  py::class_<CommutatorReport>(m, "CommutatorReport")
      .def_readonly("name", &CommutatorReport::name)
      .def_readonly("residual", &CommutatorReport::residual)
      .def_readonly("tolerance", &CommutatorReport::tolerance)
      .def_readonly("defect_rank", &CommutatorReport::defect_rank)
      .def_readonly("defect_support", &CommutatorReport::defect_support)
      .def_readonly("pass_", &CommutatorReport::pass)
      .def("__repr__", [](const CommutatorReport& r) {
        return "<CommutatorReport '" + r.name +
               "' residual=" + std::to_string(r.residual) +
               (r.pass ? " pass>" : " FAIL>");
      });

  m.def("analyze_residual", &analyze_residual, py::arg("name"),
        py::arg("delta"), py::arg("guard"), py::arg("tolerance"),
        py::arg("basis"), py::arg("max_defect_rank") = 2);

  py::class_<Su11Sector>(m, "Su11Sector")
      .def_readonly("k3", &Su11Sector::k3)
      .def_readonly("kp", &Su11Sector::kp)
      .def_readonly("km", &Su11Sector::km)
      .def_readonly("k1", &Su11Sector::k1)
      .def_readonly("k2", &Su11Sector::k2);

  py::class_<Su2Sector>(m, "Su2Sector")
      .def_readonly("s3", &Su2Sector::s3)
      .def_readonly("sp", &Su2Sector::sp)
      .def_readonly("sm", &Su2Sector::sm)
      .def_readonly("s1", &Su2Sector::s1)
      .def_readonly("s2", &Su2Sector::s2);

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def_readonly("family", &GeneratorSet::family)
      .def_readonly("k", &GeneratorSet::k)
      .def_readonly("s", &GeneratorSet::s)
      .def_readonly("i1", &GeneratorSet::i1)
      .def_readonly("i2", &GeneratorSet::i2)
      .def_readonly("i3", &GeneratorSet::i3)
      .def_readonly("r1", &GeneratorSet::r1)
      .def_readonly("r2", &GeneratorSet::r2)
      .def_readonly("r3", &GeneratorSet::r3);

  m.def("build_so4", &build_so4, py::arg("family"));
  m.def(
      "verify_relation_table",
      [](const GeneratorSet& gens, const Operator& guard, double tolerance,
         const LabeledBasis& basis) {
        return verify_relations(gens, full_relation_table(), guard, tolerance,
                                basis);
      },
      py::arg("generators"), py::arg("guard"), py::arg("tolerance"),
      py::arg("basis"),
      "Check every commutation relation of the dressed algebra");

  // --- models ------------------------------------------------------------
  py::enum_<Branch>(m, "Branch")
      .value("PLUS", Branch::Plus)
      .value("MINUS", Branch::Minus);

  py::class_<DiracParams>(m, "DiracParams")
      .def(py::init([](double m_, double omega) {
             return DiracParams{m_, omega};
           }),
           py::arg("m") = 1.0, py::arg("omega") = 1.0)
      .def_readwrite("m", &DiracParams::m)
      .def_readwrite("omega", &DiracParams::omega);

  m.def("dirac_hamiltonian", &dirac_hamiltonian, py::arg("params"),
        py::arg("space"));
  m.def("dirac_hamiltonian_xp", &dirac_hamiltonian_xp, py::arg("params"),
        py::arg("space"));
  m.def("dirac_unitary", &dirac_unitary, py::arg("space"));
  m.def("dirac_angle", &dirac_angle, py::arg("params"), py::arg("space"));
  m.def("dirac_energy", &dirac_energy, py::arg("params"), py::arg("n"),
        py::arg("branch"));
  m.def("dirac_dressing", &dirac_dressing, py::arg("params"),
        py::arg("space"));
  m.def("dirac_family", &dirac_family, py::arg("params"), py::arg("space"));
  m.def("dirac_labeled_basis", &dirac_labeled_basis, py::arg("params"),
        py::arg("space"));

  py::class_<JCParams>(m, "JCParams")
      .def(py::init([](double omega, double Omega, double J) {
             return JCParams{omega, Omega, J};
           }),
           py::arg("omega") = 1.0, py::arg("Omega") = 1.0,
           py::arg("J") = 0.1)
      .def_readwrite("omega", &JCParams::omega)
      .def_readwrite("Omega", &JCParams::Omega)
      .def_readwrite("J", &JCParams::J);

  m.def("jc_hamiltonian", &jc_hamiltonian, py::arg("params"),
        py::arg("space"));
  m.def("jc_unitary", &jc_unitary, py::arg("space"));
  m.def("jc_angle", &jc_angle, py::arg("params"), py::arg("space"));
  m.def("jc_energy", &jc_energy, py::arg("params"), py::arg("n"),
        py::arg("branch"));
  m.def("jc_detached_energy", &jc_detached_energy, py::arg("params"));
  m.def("jc_dressing", &jc_dressing, py::arg("params"), py::arg("space"));
  m.def("jc_family", &jc_family, py::arg("params"), py::arg("space"));
  m.def("jc_labeled_basis", &jc_labeled_basis, py::arg("params"),
        py::arg("space"));

  py::class_<AngularLattice>(m, "AngularLattice")
      .def(py::init([](int l_min, int l_max) {
             return AngularLattice{l_min, l_max};
           }),
           py::arg("l_min"), py::arg("l_max"))
      .def_readonly("l_min", &AngularLattice::l_min)
      .def_readonly("l_max", &AngularLattice::l_max)
      .def("dim", &AngularLattice::dim);

  m.def("angular_momentum", &angular_momentum, py::arg("lattice"));
  m.def("angular_shift", &angular_shift, py::arg("lattice"));

  // --- report drivers ------------------------------------------------------
  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("model", &RunConfig::model)
      .def_readwrite("n_max", &RunConfig::n_max)
      .def_readwrite("guard", &RunConfig::guard)
      .def_readwrite("tolerance", &RunConfig::tolerance)
      .def_readwrite("m", &RunConfig::m)
      .def_readwrite("omega", &RunConfig::omega)
      .def_readwrite("Omega", &RunConfig::Omega)
      .def_readwrite("J", &RunConfig::J)
      .def_readwrite("l_min", &RunConfig::l_min)
      .def_readwrite("l_max", &RunConfig::l_max);

  m.def(
      "verify_json",
      [](const RunConfig& config) { return report_to_json(run_verify(config)); },
      py::arg("config"),
      "Run the full verification suite; returns the JSON report");
  m.def(
      "spectrum_json",
      [](const RunConfig& config) {
        return report_to_json(run_spectrum(config));
      },
      py::arg("config"),
      "Compare analytic levels against dense eigenvalues; JSON report");
  m.def(
      "verify_csv",
      [](const RunConfig& config) { return report_to_csv(run_verify(config)); },
      py::arg("config"));
}
