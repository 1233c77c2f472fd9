#include "dynalg/dirac_oscillator.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace dynalg {

void validate(const DiracParams& p) {
  if (!(p.m > 0.0)) {
    throw std::domain_error("DiracParams: mass must be positive");
  }
  if (!(p.omega >= 0.0)) {
    throw std::domain_error("DiracParams: omega must be nonnegative");
  }
}

Operator dirac_hamiltonian(const DiracParams& p, const CompositeSpace& space) {
  validate(p);
  const double coupling = std::sqrt(2.0 * p.m * p.omega);
  const Operator a = ladder_lowering(space.fock);
  const Operator id = mode_identity(space.fock);
  return block2(p.m * id, coupling * a.adjoint(), coupling * a, -p.m * id)
      .with_label("H_do");
}

Operator dirac_hamiltonian_xp(const DiracParams& p,
                              const CompositeSpace& space) {
  validate(p);
  auto [x, mom] = position_momentum(space.fock, p.m, p.omega);
  return (tensor(pauli(PauliAxis::Y), mom) +
          (p.m * p.omega) * tensor(pauli(PauliAxis::X), x) +
          p.m * tensor(pauli(PauliAxis::Z), mode_identity(space.fock)))
      .with_label("H_do");
}

Operator dirac_unitary(const CompositeSpace& space) {
  const Operator a = ladder_lowering(space.fock);
  const Operator zero = Operator::zero(tag_of(space.fock));
  return block2(mode_identity(space.fock), zero, zero,
                a * pinv_sqrt_inverse(number_op(space.fock)))
      .with_label("U");
}

Operator dirac_angle(const DiracParams& p, const FockSpace& space) {
  validate(p);
  return diag_function(number_op(space), [&p](double n) {
    return std::atan(std::sqrt(2.0 * p.omega * n / p.m));
  });
}

double dirac_energy(const DiracParams& p, int n, Branch branch) {
  validate(p);
  if (n < 0 || (branch == Branch::Minus && n < 1)) {
    throw InvalidBranch("dirac_energy: the minus branch starts at n = 1");
  }
  const double e = std::sqrt(2.0 * p.m * p.omega * n + p.m * p.m);
  return branch == Branch::Plus ? e : -e;
}

SpectrumEntry dirac_eigenstate(const DiracParams& p,
                               const CompositeSpace& space, int n,
                               Branch branch) {
  validate(p);
  if (n < 0 || n > space.n_max() ||
      (branch == Branch::Minus && n < 1)) {
    throw InvalidBranch("dirac_eigenstate: invalid (branch, n) request");
  }
  const int l = space.fock.dim();
  const double theta =
      std::atan(std::sqrt(2.0 * p.omega * static_cast<double>(n) / p.m));
  Vector state = Vector::Zero(2 * l);
  if (branch == Branch::Plus) {
    state(n) = std::cos(theta / 2.0);
    if (n >= 1) {
      state(l + n - 1) = std::sin(theta / 2.0);
    }
  } else {
    state(n) = -std::sin(theta / 2.0);
    state(l + n - 1) = std::cos(theta / 2.0);
  }
  return {branch, n, dirac_energy(p, n, branch), std::move(state)};
}

Operator dirac_dressing(const DiracParams& p, const CompositeSpace& space) {
  return (dirac_unitary(space) * spin_rotation(dirac_angle(p, space.fock)))
      .with_label("W");
}

DressedFamily dirac_family(const DiracParams& p, const CompositeSpace& space) {
  return make_dressed_family(dirac_dressing(p, space), space);
}

LabeledBasis dirac_labeled_basis(const DiracParams& p,
                                 const CompositeSpace& space) {
  const int n_max = space.n_max();
  const int l = space.fock.dim();
  LabeledBasis basis;
  basis.vectors = Matrix::Zero(2 * l, 2 * l);
  int col = 0;
  auto add = [&](int branch, int n) {
    const SpectrumEntry e = dirac_eigenstate(
        p, space, n, branch > 0 ? Branch::Plus : Branch::Minus);
    basis.vectors.col(col) = e.state;
    basis.labels.push_back(eigenstate_label(branch, n));
    basis.family[{branch, n}] = col;
    ++col;
  };
  for (int n = 0; n <= n_max; ++n) add(+1, n);
  for (int n = 1; n <= n_max; ++n) add(-1, n);
  // |down, n_max> never appears in the eigenstate family; it completes the
  // basis and carries the spurious dense eigenvalue at exactly -m.
  basis.vectors(2 * l - 1, col) = 1.0;
  basis.labels.push_back(bare_label(1, n_max));
  return basis;
}

DenseCheck dirac_dense_check(const DiracParams& p, const CompositeSpace& space,
                             GuardBand guard, double tol) {
  validate(p);
  DenseCheck check;
  const Eigensystem es =
      hermitian_eigensystem(dirac_hamiltonian(p, space));

  std::multiset<double> unmatched(es.values.data(),
                                  es.values.data() + es.values.size());
  auto take_nearest = [&unmatched](double target) {
    auto it = unmatched.lower_bound(target);
    if (it == unmatched.end() ||
        (it != unmatched.begin() &&
         target - *std::prev(it) < *it - target)) {
      --it;
    }
    const double got = *it;
    unmatched.erase(it);
    return got;
  };

  const int top = space.n_max() - guard.g;
  check.pass = true;
  auto match = [&](Branch branch, int n) {
    SpectrumMatch row;
    row.branch = branch == Branch::Plus ? "+" : "-";
    row.n = n;
    row.analytic = dirac_energy(p, n, branch);
    row.dense = take_nearest(row.analytic);
    row.abs_diff = std::abs(row.dense - row.analytic);
    check.max_abs_diff = std::max(check.max_abs_diff, row.abs_diff);
    if (row.abs_diff > tol) check.pass = false;
    check.matches.push_back(row);
  };
  for (int n = 0; n <= top; ++n) match(Branch::Plus, n);
  for (int n = 1; n <= top; ++n) match(Branch::Minus, n);
  check.artifacts.assign(unmatched.begin(), unmatched.end());
  return check;
}

}  // namespace dynalg
