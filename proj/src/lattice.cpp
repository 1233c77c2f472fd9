#include "dynalg/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace dynalg {

SpaceTag tag_of(const AngularLattice& lat) {
  return {SpaceKind::Mode, lat.dim()};
}

Operator angular_momentum(const AngularLattice& lat) {
  Matrix m = Matrix::Zero(lat.dim(), lat.dim());
  for (int i = 0; i < lat.dim(); ++i) {
    m(i, i) = static_cast<double>(lat.l_min + i);
  }
  return Operator(tag_of(lat), std::move(m), "l");
}

Operator angular_shift(const AngularLattice& lat) {
  Matrix s = Matrix::Zero(lat.dim(), lat.dim());
  for (int i = 1; i < lat.dim(); ++i) {
    s(i - 1, i) = 1.0;
  }
  return Operator(tag_of(lat), std::move(s), "S");
}

DeformedMomentumCheck check_deformed_l(const AngularLattice& lat, int g,
                                       double tol) {
  if (g < 1 || g >= lat.dim()) {
    throw std::out_of_range("check_deformed_l: need 1 <= g < dim");
  }
  const Operator l = angular_momentum(lat);
  const Operator s = angular_shift(lat);
  const Operator id = Operator::identity(tag_of(lat));
  const Operator zero = Operator::zero(tag_of(lat));

  // Spinor dressing from the unit shift.  The operator is applied from the
  // adjoint side so that the lower block picks up S+ l S = l - 1: the upper
  // component keeps l while the lower one carries l - 1, which is exactly
  // the deformed angular momentum that commutes with the planar Hamiltonian.
  const Operator u = block2(id, zero, zero, s);
  const Operator deformed =
      Operator(u.space(), u.matrix().adjoint() * tensor(spin_identity(), l).matrix() *
                              u.matrix());

  const Operator target = block2(
      l, zero, zero,
      l - id);  // diag(l, l-1)

  const Matrix delta = deformed.matrix() - target.matrix();

  // Interior projector: both spin blocks, lattice sites l >= l_min + g.
  Matrix proj = Matrix::Zero(2 * lat.dim(), 2 * lat.dim());
  for (int i = g; i < lat.dim(); ++i) {
    proj(i, i) = 1.0;
    proj(lat.dim() + i, lat.dim() + i) = 1.0;
  }

  DeformedMomentumCheck check;
  check.interior_residual = (proj * delta * proj).norm();
  // The only defect sits at the shift kernel: the (down, l_min) diagonal
  // entry reads 0 instead of l_min - 1.
  check.kernel_defect = std::abs(delta(lat.dim(), lat.dim()));
  check.pass = check.interior_residual <= tol;
  return check;
}

}  // namespace dynalg
