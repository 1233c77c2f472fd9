#pragma once

#include <vector>

#include "dynalg/dirac_oscillator.hpp"  // Branch, SpectrumMatch, DenseCheck
#include "dynalg/dressed.hpp"
#include "dynalg/operator.hpp"
#include "dynalg/ops.hpp"

namespace dynalg {

// Jaynes-Cummings Hamiltonian (rotating-wave form) in 2x2 blocks:
//
//   H = [[ omega N + Omega/2, J a   ],
//        [ J a+,              omega N - Omega/2 ]]
//
// The isometry V = diag(1, 1/sqrt(N) a+) plus a spin rotation by
// phi_N = atan2(2 J sqrt(N+1), Omega - omega) diagonalizes it, giving the
// doublet spectrum omega(n + 1/2) +- sqrt(J^2 (n+1) + (Omega - omega)^2 / 4)
// for n >= 0 in both branches, plus the detached eigenstate |down,0> at
// exactly -Omega/2 which no doublet contains.
struct JCParams {
  double omega = 1.0;  // mode frequency
  double Omega = 1.0;  // level splitting
  double J = 0.1;      // coupling; J = 0 allowed for spectra only
};

void validate(const JCParams& p);  // omega > 0, Omega > 0

Operator jc_hamiltonian(const JCParams& p, const CompositeSpace& space);

// V = [[1, 0], [0, 1/sqrt(N) a+]]; maps |down,n> -> |down,n+1>.  Isometry up
// to the truncation edge: V+ V = 1 - |down,n_max><down,n_max|,
// V V+ = 1 - |down,0><down,0| exactly.
Operator jc_unitary(const CompositeSpace& space);

// Mixing angle phi_N = atan2(2 J sqrt(N+1), Omega - omega), diagonal; lands
// in (0, pi) for J > 0 and (-pi, 0) for J < 0.  Throws ZeroCoupling when
// J = 0 on resonance (angle undefined).
Operator jc_angle(const JCParams& p, const FockSpace& space);

double jc_energy(const JCParams& p, int n, Branch branch);

// Detached eigenstate energy, exactly -Omega/2.
double jc_detached_energy(const JCParams& p);

// W = V exp(-i sigma2 phi_N / 2).
Operator jc_dressing(const JCParams& p, const CompositeSpace& space);

DressedFamily jc_family(const JCParams& p, const CompositeSpace& space);

struct JCSpectrumEntry {
  Branch branch;
  int n;
  double energy;
  Vector state;
  bool detached;
};

// Doublets for 0 <= n <= n_max - g, both branches, followed by the detached
// entry (always emitted, first-class).
std::vector<JCSpectrumEntry> jc_eigenstates(const JCParams& p,
                                            const CompositeSpace& space,
                                            GuardBand guard);

LabeledBasis jc_labeled_basis(const JCParams& p, const CompositeSpace& space);

// Analytic-versus-dense reconciliation including the detached level; total
// dense count is 2(n_max + 1) = doublets + detached + one edge artifact.
DenseCheck jc_dense_check(const JCParams& p, const CompositeSpace& space,
                          GuardBand guard, double tol = 1e-9);

}  // namespace dynalg
