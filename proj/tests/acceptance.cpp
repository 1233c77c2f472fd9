// Acceptance gate: one line per criterion, exit code = number of failures.
//
// Every threshold here is pinned; the printed measurements are the evidence
// that the numerical laboratory reproduces the dressed-model structure it
// promises: spectra, conservation, the commutation-relation table with
// confined defects, matrix elements, structural identities, the planar
// lattice variant, and agreement with implementation-independent oracles.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dynalg/dirac_oscillator.hpp"
#include "dynalg/jaynes_cummings.hpp"
#include "dynalg/lattice.hpp"
#include "dynalg/ops.hpp"
#include "dynalg/report.hpp"
#include "dynalg/so4.hpp"
#include "oracles.hpp"

using namespace dynalg;

namespace {

int failures = 0;

void line(int idx, bool ok, const std::string& text) {
  std::printf("[%d/8] %s  %s\n", idx, ok ? "PASS" : "FAIL", text.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main() {
  const int n_max = 60;
  const int guard = 3;
  const CompositeSpace space{FockSpace(n_max)};

  // 1. Oscillator spectrum: dense eigenvalues against the closed-form ladder
  //    for every retained level, within 1e-9, in under five seconds.
  {
    const auto start = std::chrono::steady_clock::now();
    const DiracParams p{1.0, 1.0};
    const DenseCheck check = dirac_dense_check(p, space, GuardBand{guard}, 1e-9);
    const double elapsed = seconds_since(start);
    int rows = 0;
    double worst = 0.0;
    for (const SpectrumMatch& row : check.matches) {
      ++rows;
      worst = std::max(worst, row.abs_diff);
    }
    const bool ok =
        check.pass && rows == 2 * (n_max - guard) + 1 && worst <= 1e-9 &&
        elapsed < 5.0;
    line(1, ok,
         "oscillator spectrum n<=57: " + std::to_string(rows) +
             " levels matched, worst |analytic-dense| = " + fmt(worst) +
             " (<= 1e-9), " + fmt(elapsed) + " s (< 5 s)");
  }

  // 2. Cavity spectra for three parameter sets plus the detached level at
  //    minus half the splitting, all within 1e-10.
  {
    const std::vector<JCParams> sets = {
        {1.0, 1.0, 0.1}, {1.0, 2.0, 0.25}, {0.7, 1.9, -0.35}};
    double worst = 0.0;
    double worst_detached = 1e300;
    bool all_pass = true;
    for (const JCParams& p : sets) {
      const DenseCheck check = jc_dense_check(p, space, GuardBand{guard}, 1e-10);
      all_pass = all_pass && check.pass;
      bool saw_detached = false;
      for (const SpectrumMatch& row : check.matches) {
        worst = std::max(worst, row.abs_diff);
        if (row.detached) {
          saw_detached = true;
          worst_detached = std::min(worst_detached, row.abs_diff);
        }
      }
      all_pass = all_pass && saw_detached;
    }
    const bool ok = all_pass && worst <= 1e-10;
    line(2, ok,
         "cavity spectra, 3 parameter sets + detached level: worst "
         "|analytic-dense| = " +
             fmt(worst) + " (<= 1e-10), detached matched to " +
             fmt(worst_detached));
  }

  // 3. Conservation: the dressed number and spin projections commute with
  //    their Hamiltonians on the guard band within 1e-9.
  {
    const DiracParams dp{1.0, 1.0};
    const JCParams jp{1.0, 1.3, 0.2};
    const Operator g = guard_projector(space, guard);
    const Operator h_do = dirac_hamiltonian(dp, space);
    const Operator h_jc = jc_hamiltonian(jp, space);
    const DressedFamily fam_do = dirac_family(dp, space);
    const DressedFamily fam_jc = jc_family(jp, space);
    double worst = 0.0;
    for (const auto* pair :
         {&fam_do, &fam_jc}) {
      const Operator& h = (pair == &fam_do) ? h_do : h_jc;
      worst = std::max(worst, (g.matrix() *
                               commutator(pair->number, h).matrix() *
                               g.matrix())
                                  .norm());
      worst = std::max(worst, (g.matrix() *
                               commutator(pair->spin3, h).matrix() *
                               g.matrix())
                                  .norm());
    }
    const bool ok = worst <= 1e-9;
    line(3, ok,
         "conserved pair in both models: worst guarded commutator norm = " +
             fmt(worst) + " (<= 1e-9)");
  }

  // 4. The full commutation-relation table holds in both models with every
  //    defect of rank <= 2 confined to the known states.
  {
    const DiracParams dp{1.0, 1.0};
    const DressedFamily fam_do = dirac_family(dp, space);
    const LabeledBasis basis_do = dirac_labeled_basis(dp, space);
    const JCParams jp{1.0, 1.3, 0.2};
    const DressedFamily fam_jc = jc_family(jp, space);
    const LabeledBasis basis_jc = jc_labeled_basis(jp, space);
    const Operator g = guard_projector(space, guard);

    const auto reports_do = verify_relations(build_so4(fam_do),
                                             full_relation_table(), g, 1e-9,
                                             basis_do);
    const auto reports_jc = verify_relations(build_so4(fam_jc),
                                             full_relation_table(), g, 1e-9,
                                             basis_jc);
    bool ok = reports_do.size() == 36 && reports_jc.size() == 36;
    double worst = 0.0;
    int max_rank = 0;
    const std::set<std::string> allowed_do = {"eig(+,0)", "eig(-,1)"};
    const std::set<std::string> allowed_jc = {"bare(down,0)"};
    for (const CommutatorReport& r : reports_do) {
      ok = ok && r.pass;
      worst = std::max(worst, r.residual);
      max_rank = std::max(max_rank, r.defect_rank);
      for (const std::string& s : r.defect_support) ok = ok && allowed_do.count(s) > 0;
    }
    for (const CommutatorReport& r : reports_jc) {
      ok = ok && r.pass;
      worst = std::max(worst, r.residual);
      max_rank = std::max(max_rank, r.defect_rank);
      for (const std::string& s : r.defect_support) ok = ok && allowed_jc.count(s) > 0;
    }
    line(4, ok,
         "full relation table, 36 relations x 2 models: worst deflated "
         "residual = " +
             fmt(worst) + " (<= 1e-9), max defect rank " +
             std::to_string(max_rank) + " (<= 2), supports confined");
  }

  // 5. Ladder matrix elements reproduce the closed forms to 1e-9 and the
  //    diagonal generators climb with unit slope; both diagonal offset
  //    conventions are recorded side by side.
  {
    const DiracParams dp{1.0, 1.0};
    const DressedFamily fam = dirac_family(dp, space);
    const LabeledBasis basis = dirac_labeled_basis(dp, space);
    const MatrixElementTable table =
        matrix_element_table(build_so4(fam), basis, 1, 10, n_max, guard);
    double worst_slope = 0.0;
    std::ostringstream offsets;
    for (const CartanDiagonal& d : table.diagonals) {
      worst_slope = std::max(worst_slope, d.slope_deviation);
      offsets << " " << d.generator << (d.branch > 0 ? "(+)" : "(-)") << "="
              << d.offset_computed << "|" << d.offset_closed_form;
    }
    const bool ok = table.max_offdiag_err <= 1e-9 && worst_slope <= 1e-9;
    line(5, ok,
         "matrix elements n=1..10: worst |element-closed form| = " +
             fmt(table.max_offdiag_err) + " (<= 1e-9), slope deviation " +
             fmt(worst_slope) + "; offsets computed|closed:" + offsets.str());
  }

  // 6. Structural identities of the dressing transformations.
  {
    const DiracParams dp{1.0, 1.0};
    const Operator u = dirac_unitary(space);
    const Operator id = composite_identity(space);
    const int fd = space.fock.dim();

    Matrix expected = Matrix::Identity(space.dim(), space.dim());
    expected(fd, fd) = 0.0;
    const double left_defect =
        max_abs_entry((u.adjoint() * u).matrix() - expected);

    const Operator g = guard_projector(space, guard);
    const Operator half_spin =
        0.5 * tensor(pauli(PauliAxis::Z), mode_identity(space.fock));
    const double invariance =
        (g.matrix() * (dress(u, half_spin) - half_spin).matrix() * g.matrix())
            .norm();

    const Operator h = dirac_hamiltonian(dp, space);
    const Operator w = dirac_dressing(dp, space);
    const Operator target =
        tensor(pauli(PauliAxis::Z),
               diag_function(number_op(space.fock), [](double n) {
                 return std::sqrt(2.0 * n + 1.0);
               }));
    Matrix delta =
        w.matrix().adjoint() * h.matrix() * w.matrix() - target.matrix();
    const double exception = std::abs(delta(fd, fd) - Complex(1.0, 0.0));
    delta(fd, fd) = 0.0;
    const double offdefect = max_abs_entry(delta);

    const JCParams jp{1.0, 1.3, 0.2};
    const Operator hj = jc_hamiltonian(jp, space);
    const Operator wj = jc_dressing(jp, space);
    const double dd = jp.Omega - jp.omega;
    const Operator target_j =
        tensor(spin_identity(),
               diag_function(number_op(space.fock),
                             [&](double n) { return jp.omega * (n + 0.5); })) +
        tensor(pauli(PauliAxis::Z),
               diag_function(number_op(space.fock), [&](double n) {
                 return std::sqrt(jp.J * jp.J * (n + 1.0) + 0.25 * dd * dd);
               }));
    const double two_step_jc =
        (g.matrix() *
         (wj.matrix().adjoint() * hj.matrix() * wj.matrix() -
          target_j.matrix()) *
         g.matrix())
            .norm();

    const bool ok = left_defect <= 1e-12 && invariance <= 1e-12 &&
                    exception <= 1e-12 && offdefect <= 1e-9 &&
                    two_step_jc <= 1e-9;
    line(6, ok,
         "structural identities: one-sided unitarity defect " +
             fmt(left_defect) + ", spin invariance " + fmt(invariance) +
             " (<= 1e-12); two-step diagonalization off-exception " +
             fmt(offdefect) + ", cavity guard band " + fmt(two_step_jc) +
             " (<= 1e-9)");
  }

  // 7. Planar lattice: the dressed site operator reads diag(l, l-1) exactly
  //    on the interior for l in [-20, 20], in under a second.
  {
    const auto start = std::chrono::steady_clock::now();
    const AngularLattice lat{-20, 20};
    const DeformedMomentumCheck check = check_deformed_l(lat, 1, 1e-12);
    const double elapsed = seconds_since(start);
    const bool ok = check.pass && check.interior_residual <= 1e-12 &&
                    std::abs(check.kernel_defect - 21.0) <= 1e-12 &&
                    elapsed < 1.0;
    line(7, ok,
         "planar lattice l in [-20,20]: interior residual = " +
             fmt(check.interior_residual) + " (<= 1e-12), kernel defect " +
             fmt(check.kernel_defect) + " (= 21), " + fmt(elapsed) +
             " s (< 1 s)");
  }

  // 8. Oracle independence: the rotation matches a scaled-Taylor matrix
  //    exponential, and analytic levels match third-party frozen values.
  {
    const DiracParams dp{1.0, 1.0};
    const Operator angle_do = dirac_angle(dp, space.fock);
    const Eigen::MatrixXcd gen_do =
        Complex(0.0, -0.5) *
        oracle_kron(pauli(PauliAxis::Y).matrix(), angle_do.matrix());
    const double rot_do =
        (spin_rotation(angle_do).matrix() - oracle_expm(gen_do))
            .cwiseAbs()
            .maxCoeff();

    const JCParams jp{1.0, 2.0, 0.25};
    const Operator angle_jc = jc_angle(jp, space.fock);
    const Eigen::MatrixXcd gen_jc =
        Complex(0.0, -0.5) *
        oracle_kron(pauli(PauliAxis::Y).matrix(), angle_jc.matrix());
    const double rot_jc =
        (spin_rotation(angle_jc).matrix() - oracle_expm(gen_jc))
            .cwiseAbs()
            .maxCoeff();

    const double lit1 =
        std::abs(dirac_energy(dp, 57, Branch::Plus) - 10.723805294763608);
    const double lit2 =
        std::abs(jc_energy(jp, 9, Branch::Plus) - 10.435414346693486);
    const double lit3 = std::abs(jc_energy(JCParams{0.7, 1.9, -0.35}, 4,
                                           Branch::Minus) -
                                 2.1638458538341991);

    const double worst_rot = std::max(rot_do, rot_jc);
    const double worst_lit = std::max({lit1, lit2, lit3});
    const bool ok = worst_rot <= 1e-12 && worst_lit <= 1e-12;
    line(8, ok,
         "independent oracles: rotation vs Taylor exponential " +
             fmt(worst_rot) + " (<= 1e-12), frozen level literals " +
             fmt(worst_lit) + " (<= 1e-12)");
  }

  if (failures == 0) {
    std::printf("all acceptance criteria satisfied\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
