#pragma once

#include <string>
#include <vector>

#include "dynalg/operator.hpp"
#include "dynalg/ops.hpp"

namespace dynalg {

// Finite angular-momentum lattice l_min..l_max (integers), index
// i = l - l_min.  Models the orbital content of the planar generalization:
// the phase factor accompanying the momentum lowers the angular momentum of
// the lower spinor component by one unit.
struct AngularLattice {
  int l_min;
  int l_max;

  AngularLattice(int lo, int hi) : l_min(lo), l_max(hi) {
    if (hi <= lo) {
      throw std::invalid_argument("AngularLattice: need l_max > l_min");
    }
  }
  int dim() const { return l_max - l_min + 1; }
};

SpaceTag tag_of(const AngularLattice& lat);

// diag(l_min..l_max)
Operator angular_momentum(const AngularLattice& lat);

// Unit shift S|l> = |l-1>, S|l_min> = 0 — the lattice image of the
// unit-modulus momentum phase.  S+ S = 1 - |l_min><l_min| exactly; S S+
// misses only the top site, 1 - |l_max><l_max|.
Operator angular_shift(const AngularLattice& lat);

// Verdict of the deformed angular momentum check.
struct DeformedMomentumCheck {
  double interior_residual = 0.0;  // rows/cols with l >= l_min + g
  double kernel_defect = 0.0;      // |entry| at the shift kernel (l_min)
  bool pass = false;
};

// Builds the spinor dressing built from the unit shift and verifies that the
// dressed angular momentum splits into blocks diag(l, l-1): the conserved
// deformed angular momentum.  Exact (to rounding) away from the l_min
// kernel; requires g >= 1.
DeformedMomentumCheck check_deformed_l(const AngularLattice& lat, int g,
                                       double tol = 1e-12);

}  // namespace dynalg
