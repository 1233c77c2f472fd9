#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dynalg/jaynes_cummings.hpp"
#include "dynalg/ops.hpp"

using namespace dynalg;

namespace {
const CompositeSpace kSpace{FockSpace(20)};
const JCParams kResonant{1.0, 1.0, 0.1};
const JCParams kDetuned{1.0, 2.0, 0.25};
}  // namespace

TEST_CASE("hamiltonian couples neighbouring excitation pairs with sqrt weights") {
  const Operator h = jc_hamiltonian(kDetuned, kSpace);
  const int fd = kSpace.fock.dim();
  for (int n = 0; n < fd; ++n) {
    CHECK(h.matrix()(n, n) == Complex(1.0 * n + 1.0, 0.0));
    CHECK(h.matrix()(fd + n, fd + n) == Complex(1.0 * n - 1.0, 0.0));
  }
  for (int n = 0; n + 1 < fd; ++n) {
    const double want = 0.25 * std::sqrt(n + 1.0);
    CHECK(std::abs(h.matrix()(n, fd + n + 1).real() - want) < 1e-16);
    CHECK(std::abs(h.matrix()(fd + n + 1, n).real() - want) < 1e-16);
  }
  CHECK(max_abs_entry(h.matrix() - h.matrix().adjoint()) == 0.0);
}

TEST_CASE("doublet energies match frozen reference values") {
  CHECK(jc_energy(kResonant, 0, Branch::Plus) ==
        doctest::Approx(0.6).epsilon(1e-15));
  CHECK(jc_energy(kResonant, 0, Branch::Minus) ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(jc_energy(kResonant, 3, Branch::Plus) ==
        doctest::Approx(3.7).epsilon(1e-15));
  CHECK(jc_energy(kResonant, 12, Branch::Plus) ==
        doctest::Approx(12.860555127546398).epsilon(1e-15));
  CHECK(jc_energy(kResonant, 12, Branch::Minus) ==
        doctest::Approx(12.139444872453602).epsilon(1e-15));

  CHECK(jc_energy(kDetuned, 0, Branch::Plus) ==
        doctest::Approx(1.0590169943749475).epsilon(1e-15));
  CHECK(jc_energy(kDetuned, 0, Branch::Minus) ==
        doctest::Approx(-0.059016994374947451).epsilon(1e-15));
  CHECK(jc_energy(kDetuned, 2, Branch::Plus) ==
        doctest::Approx(3.1614378277661475).epsilon(1e-15));
  CHECK(jc_energy(kDetuned, 9, Branch::Minus) ==
        doctest::Approx(8.5645856533065139).epsilon(1e-15));

  const JCParams odd{0.7, 1.9, -0.35};
  CHECK(jc_energy(odd, 0, Branch::Plus) ==
        doctest::Approx(1.0446221994724902).epsilon(1e-15));
  CHECK(jc_energy(odd, 4, Branch::Minus) ==
        doctest::Approx(2.1638458538341991).epsilon(1e-15));
  CHECK(jc_detached_energy(odd) == doctest::Approx(-0.95).epsilon(1e-15));
}

TEST_CASE("the dressing isometry shifts the lower block up by one quantum") {
  const Operator v = jc_unitary(kSpace);
  const int fd = kSpace.fock.dim();
  const int dim = kSpace.dim();
  // Column action: |down,n> -> |down,n+1>, top column annihilated.
  for (int n = 0; n < fd - 1; ++n) {
    Vector in = Vector::Zero(dim);
    in(fd + n) = 1.0;
    Vector out = v.matrix() * in;
    // Entries are sqrt-reciprocal products, exact to one rounding step.
    CHECK(std::abs(out(fd + n + 1) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(out.norm() - 1.0) < 1e-15);
  }
  Vector top = Vector::Zero(dim);
  top(dim - 1) = 1.0;
  CHECK((v.matrix() * top).norm() == 0.0);

  Matrix left = (v.adjoint() * v).matrix();
  Matrix expected = Matrix::Identity(dim, dim);
  expected(dim - 1, dim - 1) = 0.0;
  CHECK(max_abs_entry(left - expected) < 1e-15);

  Matrix right = (v * v.adjoint()).matrix();
  expected = Matrix::Identity(dim, dim);
  expected(fd, fd) = 0.0;
  CHECK(max_abs_entry(right - expected) < 1e-15);
}

TEST_CASE("mixing angle hits the frozen arctangent and flips with the coupling sign") {
  const Operator angle = jc_angle(kDetuned, kSpace.fock);
  CHECK(std::abs(angle.matrix()(2, 2).real() - 0.71372437894476559) < 3e-16);

  const JCParams negative{1.0, 1.0, -0.1};
  const Operator flipped = jc_angle(negative, kSpace.fock);
  CHECK(std::abs(flipped.matrix()(0, 0).real() + 1.5707963267948966) < 3e-16);

  const JCParams resonant{1.0, 1.0, 0.1};
  const Operator straight = jc_angle(resonant, kSpace.fock);
  for (int n = 0; n <= kSpace.n_max(); ++n) {
    CHECK(std::abs(straight.matrix()(n, n).real() - 1.5707963267948966) <
          3e-16);
  }
}

TEST_CASE("two-step dressing diagonalizes into mean plus splitting on the guard band") {
  const Operator h = jc_hamiltonian(kDetuned, kSpace);
  const Operator w = jc_dressing(kDetuned, kSpace);
  const Matrix dressed = w.matrix().adjoint() * h.matrix() * w.matrix();

  const double d = kDetuned.Omega - kDetuned.omega;
  const Operator mean =
      tensor(spin_identity(),
             diag_function(number_op(kSpace.fock), [&](double n) {
               return kDetuned.omega * (n + 0.5);
             }));
  const Operator split = tensor(
      pauli(PauliAxis::Z), diag_function(number_op(kSpace.fock), [&](double n) {
        return std::sqrt(kDetuned.J * kDetuned.J * (n + 1.0) + 0.25 * d * d);
      }));
  const Matrix delta = dressed - (mean + split).matrix();
  const Operator g = guard_projector(kSpace, 3);
  CHECK((g.matrix() * delta * g.matrix()).norm() < 1e-13);

  const Operator rebuilt =
      jc_unitary(kSpace) * spin_rotation(jc_angle(kDetuned, kSpace.fock));
  CHECK(frobenius_norm(w - rebuilt) == 0.0);
}

TEST_CASE("dressed number operator steps the lower block down by one") {
  const DressedFamily family = jc_family(kDetuned, kSpace);
  const int fd = kSpace.fock.dim();
  for (int n = 0; n < fd; ++n) {
    // The conjugation mixes cos^2 + sin^2 weights, so the upper diagonal
    // lands within rounding of n rather than on it exactly.
    CHECK(std::abs(family.number.matrix()(n, n) - Complex(n, 0.0)) < 1e-13);
    const double lower = std::max(n - 1.0, 0.0);
    CHECK(std::abs(family.number.matrix()(fd + n, fd + n) -
                   Complex(lower, 0.0)) < 1e-14);
  }
}

TEST_CASE("closed-form doublets and the detached state satisfy the eigenvalue equation") {
  const Operator h = jc_hamiltonian(kDetuned, kSpace);
  const auto states = jc_eigenstates(kDetuned, kSpace, GuardBand{3});
  int detached_count = 0;
  for (const JCSpectrumEntry& e : states) {
    const double residual =
        (h.matrix() * e.state - e.energy * e.state).norm();
    CHECK(residual < 1e-13);
    CHECK(std::abs(e.state.norm() - 1.0) < 1e-15);
    if (e.detached) {
      ++detached_count;
      CHECK(e.energy == -1.0);  // minus half the level splitting
      // The detached state is the bare lowest lower-block state.
      Vector bare = Vector::Zero(kSpace.dim());
      bare(kSpace.fock.dim()) = 1.0;
      CHECK((e.state - bare).norm() == 0.0);
      CHECK(residual == 0.0);
    }
  }
  CHECK(detached_count == 1);
  // Both branches for every retained excitation number, plus the detached one.
  CHECK(static_cast<int>(states.size()) == 2 * (kSpace.n_max() - 3 + 1) + 1);
}

TEST_CASE("resonance splits doublets symmetrically by the collective coupling") {
  for (int n = 0; n <= 17; ++n) {
    const double split = jc_energy(kResonant, n, Branch::Plus) -
                         jc_energy(kResonant, n, Branch::Minus);
    CHECK(split ==
          doctest::Approx(2.0 * 0.1 * std::sqrt(n + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("zero coupling is rejected on resonance and degenerates gracefully off it") {
  const JCParams dead{1.0, 1.0, 0.0};
  CHECK_THROWS_AS(jc_angle(dead, kSpace.fock), ZeroCoupling);
  CHECK_THROWS_AS(jc_dressing(dead, kSpace), ZeroCoupling);

  const JCParams detuned_dead{1.0, 2.0, 0.0};
  const Operator angle = jc_angle(detuned_dead, kSpace.fock);
  CHECK(max_abs_entry(angle.matrix()) == 0.0);  // no mixing at all
  const auto states = jc_eigenstates(detuned_dead, kSpace, GuardBand{3});
  const Operator h = jc_hamiltonian(detuned_dead, kSpace);
  for (const auto& e : states) {
    CHECK((h.matrix() * e.state - e.energy * e.state).norm() == 0.0);
  }
}

TEST_CASE("dense spectrum reconciles doublets, the detached level, and edge artifacts") {
  const DenseCheck check = jc_dense_check(kResonant, kSpace, GuardBand{3}, 1e-9);
  CHECK(check.pass);
  CHECK(check.max_abs_diff < 1e-11);

  int detached_rows = 0;
  for (const SpectrumMatch& row : check.matches) {
    if (row.detached) {
      ++detached_rows;
      CHECK(row.analytic == -0.5);
      CHECK(row.abs_diff < 1e-12);
    }
  }
  CHECK(detached_rows == 1);

  // Every dense level is either matched or declared an artifact.
  CHECK(static_cast<int>(check.matches.size() + check.artifacts.size()) ==
        2 * (kSpace.n_max() + 1));

  // The unpaired top upper-block state sits at omega*n_max + Omega/2 exactly.
  const double edge = 1.0 * kSpace.n_max() + 0.5;
  double nearest = 1e300;
  for (double v : check.artifacts) nearest = std::min(nearest, std::abs(v - edge));
  CHECK(nearest < 1e-12);
}

TEST_CASE("parameter validation requires positive frequencies") {
  CHECK_THROWS_AS(validate(JCParams{0.0, 1.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(validate(JCParams{1.0, 0.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(validate(JCParams{-1.0, 1.0, 0.1}), std::domain_error);
  CHECK_NOTHROW(validate(JCParams{1.0, 1.0, 0.0}));
  CHECK_NOTHROW(validate(JCParams{1.0, 1.0, -0.3}));
}

TEST_CASE("labeled basis pairs doublets and names the leftover bare states") {
  const LabeledBasis basis = jc_labeled_basis(kResonant, kSpace);
  CHECK(static_cast<int>(basis.labels.size()) == kSpace.dim());
  CHECK(basis.labels.front() == "eig(+,0)");
  CHECK(std::find(basis.labels.begin(), basis.labels.end(), "bare(down,0)") !=
        basis.labels.end());
  CHECK(std::find(basis.labels.begin(), basis.labels.end(), "bare(up,20)") !=
        basis.labels.end());
  CHECK(basis.has_state(+1, 0));
  CHECK(basis.has_state(-1, 0));
  CHECK_FALSE(basis.has_state(+1, kSpace.n_max()));
  const Matrix gram = basis.vectors.adjoint() * basis.vectors -
                      Matrix::Identity(kSpace.dim(), kSpace.dim());
  CHECK(gram.norm() < 1e-14);
}
