#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dynalg/dressed.hpp"
#include "dynalg/operator.hpp"

namespace dynalg {

// SU(1,1) sector built on a dressed family:
//   K3 = N~ + 1/2,  K+ = b+ xi(K3),  K- = xi(K3) b,  xi = sqrt(N~ + 1)
// (xi evaluated as a spectral function, not a power series).
struct Su11Sector {
  Operator k3, kp, km, k1, k2;
};

// SU(2) sector: S3 = Sig3 / 2, S+- = Sig+-.
struct Su2Sector {
  Operator s3, sp, sm, s1, s2;
};

// SO(4) generators I_i = Kt_i + S_i, R_i = Kt_i - S_i with the analytically
// continued Kt_1 = i K1, Kt_2 = i K2, Kt_3 = K3.  I1, I2, R1, R2 are not
// Hermitian on the Hilbert space; they are stored as-is, unhermitized.
struct GeneratorSet {
  DressedFamily family;
  Su11Sector k;
  Su2Sector s;
  Operator i1, i2, i3, r1, r2, r3;
};

Su11Sector build_su11_sector(const DressedFamily& family);
Su2Sector build_su2_sector(const DressedFamily& family);
GeneratorSet build_so4(const DressedFamily& family);

// One row of the commutation table: residual = lhs - rhs evaluated on the
// generator set.  tolerance = 0 means "use the run default".
struct Relation {
  std::string name;
  std::function<Operator(const GeneratorSet&)> lhs;
  std::function<Operator(const GeneratorSet&)> rhs;
  double tolerance = 0.0;
};

// Dressed oscillator/spin primitives: [N~,b] = -b, [b,b+] = 1, ...
std::vector<Relation> primitive_relations();

// SU(1,1) + SU(2) + decoupling + SO(4) structure relations.
std::vector<Relation> algebra_relations();

// primitive_relations followed by algebra_relations.
std::vector<Relation> full_relation_table();

// Evaluates every relation, measuring each residual on the guard band and
// classifying low-rank defects (see analyze_residual).
std::vector<CommutatorReport> verify_relations(
    const GeneratorSet& gens, const std::vector<Relation>& table,
    const Operator& guard, double default_tolerance,
    const LabeledBasis& basis);

// Closed-form matrix elements of the SO(4) generators in the eigenstate
// family.  For A in {I (alpha = 0), R (alpha = 1)} and source |br,n>:
//   A1 -> i(n+1)/2 on |br,n+1>, i n/2 on |br,n-1>, (-1)^alpha 1/2 on |-br,n>
//   A2 -> (n+1)/2,  -n/2,  br (-1)^alpha i/2 on the same targets
//   A3 -> diagonal, affine in n with unit slope.
// The A3 closed form printed alongside uses the constant (n+1) + br
// (-1)^alpha / 2, which sits exactly 1/2 above the computed diagonal for
// every generator and branch; both values are recorded, neither adjusted.
struct ElementCheck {
  std::string generator;  // "I1", "I2", "R1", "R2"
  int branch;             // +1 / -1 (source)
  int n;                  // source level
  std::string target;     // eigenstate label
  Complex computed;
  Complex expected;
  double abs_err;
};

struct CartanDiagonal {
  std::string generator;  // "I3", "R3"
  int branch;
  double offset_computed;   // diagonal(n) - n, constant when slope is 1
  double offset_closed_form;
  double slope_deviation;   // max_n |diag(n+1) - diag(n) - 1|
};

struct MatrixElementTable {
  std::vector<ElementCheck> elements;
  std::vector<CartanDiagonal> diagonals;
  double max_offdiag_err = 0.0;
};

// n range must stay inside the guard band (targets reach n_hi + 1); throws
// std::out_of_range otherwise.
MatrixElementTable matrix_element_table(const GeneratorSet& gens,
                                        const LabeledBasis& basis, int n_lo,
                                        int n_hi, int n_max, int g);

}  // namespace dynalg
