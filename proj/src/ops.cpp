#include "dynalg/ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dynalg {

namespace {

constexpr double kDiagTol = 1e-12;
constexpr double kHermTol = 1e-12;

}  // namespace

Operator ladder_lowering(const FockSpace& space) {
  Matrix a = Matrix::Zero(space.dim(), space.dim());
  for (int n = 1; n <= space.n_max; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return Operator(tag_of(space), std::move(a), "a");
}

Operator ladder_raising(const FockSpace& space) {
  return ladder_lowering(space).adjoint().with_label("a+");
}

Operator number_op(const FockSpace& space) {
  Matrix n = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k <= space.n_max; ++k) {
    n(k, k) = static_cast<double>(k);
  }
  return Operator(tag_of(space), std::move(n), "N");
}

std::pair<Operator, Operator> position_momentum(const FockSpace& space,
                                                double m, double omega) {
  if (!(m > 0.0) || !(omega > 0.0)) {
    throw std::domain_error("position_momentum: requires m > 0 and omega > 0");
  }
  const Operator a = ladder_lowering(space);
  const Operator adag = ladder_raising(space);
  const Operator x = (1.0 / std::sqrt(2.0 * m * omega)) * (a + adag);
  const Operator p = kI * std::sqrt(m * omega / 2.0) * (adag - a);
  return {x.with_label("x"), p.with_label("p")};
}

Operator pauli(PauliAxis axis) {
  Matrix s = Matrix::Zero(2, 2);
  std::string label;
  switch (axis) {
    case PauliAxis::X:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      label = "sigma1";
      break;
    case PauliAxis::Y:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      label = "sigma2";
      break;
    case PauliAxis::Z:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      label = "sigma3";
      break;
    case PauliAxis::Plus:
      s(0, 1) = 1.0;
      label = "sigma+";
      break;
    case PauliAxis::Minus:
      s(1, 0) = 1.0;
      label = "sigma-";
      break;
  }
  return Operator(spin_tag(), std::move(s), std::move(label));
}

Operator pauli(int axis) {
  switch (axis) {
    case 1:
      return pauli(PauliAxis::X);
    case 2:
      return pauli(PauliAxis::Y);
    case 3:
      return pauli(PauliAxis::Z);
    default:
      throw std::invalid_argument("pauli: axis must be 1, 2 or 3");
  }
}

Operator spin_identity() { return Operator::identity(spin_tag()); }

Operator block2(const Operator& a, const Operator& b, const Operator& c,
                const Operator& d) {
  require_same_space(a, b, "block2");
  require_same_space(a, c, "block2");
  require_same_space(a, d, "block2");
  if (a.space().kind != SpaceKind::Mode) {
    throw SpaceMismatch("block2: blocks must be mode operators, got " +
                        to_string(a.space()));
  }
  const int l = a.dim();
  Matrix m(2 * l, 2 * l);
  m.topLeftCorner(l, l) = a.matrix();
  m.topRightCorner(l, l) = b.matrix();
  m.bottomLeftCorner(l, l) = c.matrix();
  m.bottomRightCorner(l, l) = d.matrix();
  return Operator({SpaceKind::Composite, l}, std::move(m));
}

Operator tensor(const Operator& spin_op, const Operator& mode_op) {
  if (spin_op.space().kind != SpaceKind::Spin) {
    throw SpaceMismatch("tensor: first factor must be a spin operator, got " +
                        to_string(spin_op.space()));
  }
  if (mode_op.space().kind != SpaceKind::Mode) {
    throw SpaceMismatch("tensor: second factor must be a mode operator, got " +
                        to_string(mode_op.space()));
  }
  const int l = mode_op.dim();
  const Matrix& s = spin_op.matrix();
  Matrix m(2 * l, 2 * l);
  m.topLeftCorner(l, l) = s(0, 0) * mode_op.matrix();
  m.topRightCorner(l, l) = s(0, 1) * mode_op.matrix();
  m.bottomLeftCorner(l, l) = s(1, 0) * mode_op.matrix();
  m.bottomRightCorner(l, l) = s(1, 1) * mode_op.matrix();
  std::string label;
  if (!spin_op.label().empty() && !mode_op.label().empty()) {
    label = spin_op.label() + "*" + mode_op.label();
  }
  return Operator({SpaceKind::Composite, l}, std::move(m), std::move(label));
}

Operator mode_identity(const FockSpace& space) {
  return Operator::identity(tag_of(space));
}

Operator composite_identity(const CompositeSpace& space) {
  return Operator::identity(tag_of(space));
}

namespace {

// Real diagonal of d, or throws NotDiagonal.
Eigen::VectorXd checked_diagonal(const Operator& d, const char* where) {
  const Matrix& m = d.matrix();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j) {
        if (std::abs(m(i, i).imag()) > kDiagTol) {
          throw NotDiagonal(std::string(where) +
                            ": diagonal entry has imaginary part at index " +
                            std::to_string(i));
        }
      } else if (std::abs(m(i, j)) > kDiagTol) {
        throw NotDiagonal(std::string(where) + ": off-diagonal entry (" +
                          std::to_string(i) + "," + std::to_string(j) +
                          ") has magnitude " + std::to_string(std::abs(m(i, j))));
      }
    }
  }
  return m.diagonal().real();
}

}  // namespace

Operator diag_function(const Operator& d,
                       const std::function<double(double)>& f) {
  Eigen::VectorXd diag = checked_diagonal(d, "diag_function");
  Matrix out = Matrix::Zero(d.dim(), d.dim());
  for (int i = 0; i < diag.size(); ++i) {
    const double v = f(diag(i));
    if (!std::isfinite(v)) {
      throw std::domain_error("diag_function: f produced a non-finite value " +
                              std::to_string(v) + " at diagonal entry " +
                              std::to_string(diag(i)));
    }
    out(i, i) = v;
  }
  return Operator(d.space(), std::move(out));
}

Operator pinv_sqrt_inverse(const Operator& d) {
  Eigen::VectorXd diag = checked_diagonal(d, "pinv_sqrt_inverse");
  Matrix out = Matrix::Zero(d.dim(), d.dim());
  for (int i = 0; i < diag.size(); ++i) {
    const double v = diag(i);
    if (v < -kDiagTol) {
      throw std::domain_error(
          "pinv_sqrt_inverse: negative diagonal entry " + std::to_string(v));
    }
    // Moore-Penrose convention: the kernel maps to zero, not infinity.
    out(i, i) = (v <= kDiagTol) ? 0.0 : 1.0 / std::sqrt(v);
  }
  return Operator(d.space(), std::move(out));
}

Operator hermitian_function(const Operator& a,
                            const std::function<double(double)>& f) {
  Eigensystem es = hermitian_eigensystem(a);
  Eigen::VectorXd mapped(es.values.size());
  for (int i = 0; i < es.values.size(); ++i) {
    const double v = f(es.values(i));
    if (!std::isfinite(v)) {
      throw std::domain_error(
          "hermitian_function: f produced a non-finite value at eigenvalue " +
          std::to_string(es.values(i)));
    }
    mapped(i) = v;
  }
  Matrix out = es.vectors * mapped.asDiagonal() * es.vectors.adjoint();
  return Operator(a.space(), std::move(out));
}

Operator spin_rotation(const Operator& angle) {
  if (angle.space().kind != SpaceKind::Mode) {
    throw SpaceMismatch("spin_rotation: angle must be a mode operator, got " +
                        to_string(angle.space()));
  }
  const Eigen::VectorXd half = 0.5 * checked_diagonal(angle, "spin_rotation");
  const int l = angle.dim();
  Matrix r = Matrix::Zero(2 * l, 2 * l);
  for (int n = 0; n < l; ++n) {
    const double c = std::cos(half(n));
    const double s = std::sin(half(n));
    r(n, n) = c;
    r(n, l + n) = -s;
    r(l + n, n) = s;
    r(l + n, l + n) = c;
  }
  return Operator({SpaceKind::Composite, l}, std::move(r));
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a, b, "commutator");
  return Operator(a.space(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Operator dress(const Operator& w, const Operator& a) {
  require_same_space(w, a, "dress");
  return Operator(a.space(), w.matrix() * a.matrix() * w.matrix().adjoint());
}

namespace {

Matrix mode_guard(int levels, int g) {
  const int n_max = levels - 1;
  if (g < 0 || g >= n_max) {
    throw std::out_of_range("guard_projector: need 0 <= g < n_max, got g = " +
                            std::to_string(g) + " with n_max = " +
                            std::to_string(n_max));
  }
  Matrix p = Matrix::Zero(levels, levels);
  for (int n = 0; n <= n_max - g; ++n) {
    p(n, n) = 1.0;
  }
  return p;
}

}  // namespace

Operator guard_projector(const FockSpace& space, int g) {
  return Operator(tag_of(space), mode_guard(space.dim(), g));
}

Operator guard_projector(const CompositeSpace& space, int g) {
  const int l = space.fock.dim();
  Matrix p = Matrix::Zero(2 * l, 2 * l);
  p.topLeftCorner(l, l) = mode_guard(l, g);
  p.bottomRightCorner(l, l) = p.topLeftCorner(l, l);
  return Operator(tag_of(space), std::move(p));
}

double restricted_residual(const Operator& a, const Operator& target,
                           const Operator& p) {
  require_same_space(a, target, "restricted_residual");
  require_same_space(a, p, "restricted_residual");
  return (p.matrix() * (a.matrix() - target.matrix()) * p.matrix()).norm();
}

double restricted_residual(const Operator& a, Complex target,
                           const Operator& p) {
  return restricted_residual(a, Operator::scaled_identity(a.space(), target),
                             p);
}

Eigensystem hermitian_eigensystem(const Operator& a) {
  const double dev = max_abs_entry(a.matrix() - a.matrix().adjoint());
  if (dev > kHermTol) {
    throw NotHermitian("hermitian_eigensystem: max |A - A+| = " +
                       std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace dynalg
