#pragma once

#include <functional>
#include <utility>

#include "dynalg/operator.hpp"
#include "dynalg/spaces.hpp"

namespace dynalg {

// --- mode operators -------------------------------------------------------

// Lowering operator a: <n-1|a|n> = sqrt(n).  Truncation note: a and its
// adjoint obey [a, a+] = 1 everywhere except the (n_max, n_max) entry, which
// carries -n_max instead of +1; a+ a = N holds exactly.
Operator ladder_lowering(const FockSpace& space);
Operator ladder_raising(const FockSpace& space);

// Number operator, diag(0..n_max); equals a+ a exactly in truncation.
Operator number_op(const FockSpace& space);

// Quadratures x = (a + a+) / sqrt(2 m omega), p = i sqrt(m omega / 2)(a+ - a).
// Requires m > 0 and omega > 0.
std::pair<Operator, Operator> position_momentum(const FockSpace& space,
                                                double m, double omega);

// --- spin operators -------------------------------------------------------

enum class PauliAxis { X = 1, Y = 2, Z = 3, Plus, Minus };

Operator pauli(PauliAxis axis);
Operator pauli(int axis);  // 1, 2, 3
Operator spin_identity();

// --- assembly -------------------------------------------------------------

// 2x2 block matrix of mode operators: [[A, B], [C, D]] with the upper row
// acting on the spin-up block.
Operator block2(const Operator& a, const Operator& b, const Operator& c,
                const Operator& d);

// Kronecker product spin (x) mode in the frozen spin-major ordering.
Operator tensor(const Operator& spin_op, const Operator& mode_op);

Operator mode_identity(const FockSpace& space);
Operator composite_identity(const CompositeSpace& space);

// exp(-i sigma2 x angle / 2) for a diagonal mode operator "angle": the
// level-dependent spin rotation [[cos(angle/2), -sin(angle/2)],
// [sin(angle/2), cos(angle/2)]].  Exactly unitary.  Throws NotDiagonal.
Operator spin_rotation(const Operator& angle);

// --- diagonal calculus ----------------------------------------------------

// Applies f entrywise to the (real) diagonal of d.  Throws NotDiagonal when
// any off-diagonal entry or diagonal imaginary part exceeds 1e-12 in
// magnitude, and std::domain_error when f produces a non-finite value.
Operator diag_function(const Operator& d,
                       const std::function<double(double)>& f);

// Moore-Penrose 1/sqrt(d) for a nonnegative diagonal d: zero entries map to
// zero, so the inverse annihilates the kernel instead of diverging.  Throws
// std::domain_error on a negative diagonal entry.
Operator pinv_sqrt_inverse(const Operator& d);

// Spectral function f(A) of a Hermitian operator (eigendecompose, map the
// eigenvalues, reassemble).  Throws NotHermitian / std::domain_error.
Operator hermitian_function(const Operator& a,
                            const std::function<double(double)>& f);

// --- algebra --------------------------------------------------------------

Operator commutator(const Operator& a, const Operator& b);

// Dressing A -> W A W+.  W need not be unitary; co-isometries are the whole
// point here.
Operator dress(const Operator& w, const Operator& a);

// --- truncation control ---------------------------------------------------

// Projector onto levels n <= n_max - g (applied in both spin blocks for a
// composite space).  Requires 0 <= g < n_max.
Operator guard_projector(const FockSpace& space, int g);
Operator guard_projector(const CompositeSpace& space, int g);

// || P (A - target) P ||_F
double restricted_residual(const Operator& a, const Operator& target,
                           const Operator& p);
double restricted_residual(const Operator& a, Complex target,
                           const Operator& p);

// --- dense diagonalization ------------------------------------------------

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns, vectors.col(k) <-> values(k)
};

// Dense eigensystem of a Hermitian operator.  Throws NotHermitian when
// max |A - A+| exceeds 1e-12.
Eigensystem hermitian_eigensystem(const Operator& a);

}  // namespace dynalg
