#pragma once

#include <vector>

#include "dynalg/dressed.hpp"
#include "dynalg/operator.hpp"
#include "dynalg/ops.hpp"

namespace dynalg {

// 1D Dirac oscillator on a truncated mode: in 2x2 block form
//
//   H = [[ m,                sqrt(2 m omega) a+ ],
//        [ sqrt(2 m omega) a, -m               ]]
//
// It is diagonalized in two steps: the co-isometry U = diag(1, a 1/sqrt(N))
// maps it to a block form in N only, and a level-dependent spin rotation by
// theta_N = atan(sqrt(2 omega N / m)) finishes the job, giving the exact
// two-branch spectrum +-sqrt(2 m omega n + m^2).  The lower branch starts at
// n = 1: the candidate (-, 0) state is annihilated by the dressing.
struct DiracParams {
  double m = 1.0;
  double omega = 1.0;
};

enum class Branch { Plus, Minus };

void validate(const DiracParams& p);  // m > 0, omega >= 0

Operator dirac_hamiltonian(const DiracParams& p, const CompositeSpace& space);

// Same Hamiltonian assembled from quadratures,
// sigma2 x p + m omega sigma1 x x + m sigma3 x 1; requires omega > 0.
Operator dirac_hamiltonian_xp(const DiracParams& p,
                              const CompositeSpace& space);

// U = [[1, 0], [0, a 1/sqrt(N)]].  Strict co-isometry on the untruncated
// space: U+ U = 1 - |down,0><down,0| exactly; truncation additionally breaks
// U U+ = 1 at the single edge state |down,n_max>.
Operator dirac_unitary(const CompositeSpace& space);

// Mixing angle operator theta_N = atan(sqrt(2 omega N / m)), diagonal.
Operator dirac_angle(const DiracParams& p, const FockSpace& space);

// E(+-, n) = +-sqrt(2 m omega n + m^2); the minus branch requires n >= 1.
double dirac_energy(const DiracParams& p, int n, Branch branch);

struct SpectrumEntry {
  Branch branch;
  int n;
  double energy;
  Vector state;
};

// Exact eigenstate cos(theta_n/2)|up,n> + sin(theta_n/2)|down,n-1> (plus
// branch) / -sin, cos (minus branch); equals W (|+-> x |n>) to rounding.
SpectrumEntry dirac_eigenstate(const DiracParams& p,
                               const CompositeSpace& space, int n,
                               Branch branch);

// W = U exp(-i sigma2 theta_N / 2): the full dressing.
Operator dirac_dressing(const DiracParams& p, const CompositeSpace& space);

// Conserved set and shift operators dressed by W.
DressedFamily dirac_family(const DiracParams& p, const CompositeSpace& space);

// Eigenstate family plus the bare edge state completing the basis.
LabeledBasis dirac_labeled_basis(const DiracParams& p,
                                 const CompositeSpace& space);

// Analytic-versus-dense spectrum reconciliation.
struct SpectrumMatch {
  std::string branch;  // "+", "-"
  int n = 0;
  double analytic = 0.0;
  double dense = 0.0;
  double abs_diff = 0.0;
  bool detached = false;
};

struct DenseCheck {
  std::vector<SpectrumMatch> matches;
  std::vector<double> artifacts;   // dense eigenvalues left unmatched
  double max_abs_diff = 0.0;
  bool pass = false;               // every analytic level matched within tol
};

// Matches every analytic level with n <= n_max - g against the dense
// spectrum of the truncated Hamiltonian; leftover dense eigenvalues (edge
// states, e.g. the decoupled |down,n_max> at exactly -m) are reported as
// truncation artifacts.
DenseCheck dirac_dense_check(const DiracParams& p, const CompositeSpace& space,
                             GuardBand guard, double tol = 1e-9);

}  // namespace dynalg
