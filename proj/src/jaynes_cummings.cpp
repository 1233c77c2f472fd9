#include "dynalg/jaynes_cummings.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace dynalg {

void validate(const JCParams& p) {
  if (!(p.omega > 0.0)) {
    throw std::domain_error("JCParams: omega must be positive");
  }
  if (!(p.Omega > 0.0)) {
    throw std::domain_error("JCParams: Omega must be positive");
  }
}

Operator jc_hamiltonian(const JCParams& p, const CompositeSpace& space) {
  validate(p);
  const Operator n = number_op(space.fock);
  const Operator id = mode_identity(space.fock);
  const Operator a = ladder_lowering(space.fock);
  return block2(p.omega * n + (0.5 * p.Omega) * id, p.J * a,
                p.J * a.adjoint(), p.omega * n - (0.5 * p.Omega) * id)
      .with_label("H_jc");
}

Operator jc_unitary(const CompositeSpace& space) {
  const Operator zero = Operator::zero(tag_of(space.fock));
  return block2(mode_identity(space.fock), zero, zero,
                pinv_sqrt_inverse(number_op(space.fock)) *
                    ladder_raising(space.fock))
      .with_label("V");
}

Operator jc_angle(const JCParams& p, const FockSpace& space) {
  validate(p);
  const double detuning = p.Omega - p.omega;
  if (p.J == 0.0 && detuning == 0.0) {
    throw ZeroCoupling("jc_angle: undefined at J = 0 on resonance");
  }
  return diag_function(number_op(space), [&p, detuning](double n) {
    return std::atan2(2.0 * p.J * std::sqrt(n + 1.0), detuning);
  });
}

double jc_energy(const JCParams& p, int n, Branch branch) {
  validate(p);
  if (n < 0) {
    throw InvalidBranch("jc_energy: n must be >= 0");
  }
  const double split = std::sqrt(p.J * p.J * (n + 1.0) +
                                 0.25 * std::pow(p.Omega - p.omega, 2));
  return p.omega * (n + 0.5) + (branch == Branch::Plus ? split : -split);
}

double jc_detached_energy(const JCParams& p) {
  validate(p);
  return -0.5 * p.Omega;
}

Operator jc_dressing(const JCParams& p, const CompositeSpace& space) {
  return (jc_unitary(space) * spin_rotation(jc_angle(p, space.fock)))
      .with_label("W");
}

DressedFamily jc_family(const JCParams& p, const CompositeSpace& space) {
  return make_dressed_family(jc_dressing(p, space), space);
}

namespace {

Vector jc_state(const JCParams& p, const CompositeSpace& space, int n,
                Branch branch) {
  if (p.J == 0.0 && p.Omega == p.omega) {
    throw ZeroCoupling("jc_eigenstates: undefined at J = 0 on resonance");
  }
  const int l = space.fock.dim();
  const double phi =
      std::atan2(2.0 * p.J * std::sqrt(n + 1.0), p.Omega - p.omega);
  Vector state = Vector::Zero(2 * l);
  if (branch == Branch::Plus) {
    state(n) = std::cos(phi / 2.0);
    state(l + n + 1) = std::sin(phi / 2.0);
  } else {
    state(n) = -std::sin(phi / 2.0);
    state(l + n + 1) = std::cos(phi / 2.0);
  }
  return state;
}

}  // namespace

std::vector<JCSpectrumEntry> jc_eigenstates(const JCParams& p,
                                            const CompositeSpace& space,
                                            GuardBand guard) {
  validate(p);
  const int top = space.n_max() - guard.g;
  std::vector<JCSpectrumEntry> out;
  out.reserve(2 * (top + 1) + 1);
  for (Branch branch : {Branch::Plus, Branch::Minus}) {
    for (int n = 0; n <= top; ++n) {
      out.push_back({branch, n, jc_energy(p, n, branch),
                     jc_state(p, space, n, branch), false});
    }
  }
  Vector detached = Vector::Zero(space.dim());
  detached(space.fock.dim()) = 1.0;  // |down, 0>
  out.push_back(
      {Branch::Minus, 0, jc_detached_energy(p), std::move(detached), true});
  return out;
}

LabeledBasis jc_labeled_basis(const JCParams& p, const CompositeSpace& space) {
  validate(p);
  const int n_max = space.n_max();
  const int l = space.fock.dim();
  LabeledBasis basis;
  basis.vectors = Matrix::Zero(2 * l, 2 * l);
  int col = 0;
  for (int branch : {+1, -1}) {
    for (int n = 0; n <= n_max - 1; ++n) {
      basis.vectors.col(col) = jc_state(
          p, space, n, branch > 0 ? Branch::Plus : Branch::Minus);
      basis.labels.push_back(eigenstate_label(branch, n));
      basis.family[{branch, n}] = col;
      ++col;
    }
  }
  // Detached state and the bare edge state |up,n_max> complete the basis.
  basis.vectors(l, col) = 1.0;
  basis.labels.push_back(bare_label(1, 0));
  ++col;
  basis.vectors(l - 1, col) = 1.0;
  basis.labels.push_back(bare_label(0, n_max));
  return basis;
}

DenseCheck jc_dense_check(const JCParams& p, const CompositeSpace& space,
                          GuardBand guard, double tol) {
  validate(p);
  DenseCheck check;
  const Eigensystem es = hermitian_eigensystem(jc_hamiltonian(p, space));

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

  check.pass = true;
  auto match = [&](Branch branch, int n, bool detached) {
    SpectrumMatch row;
    row.branch = branch == Branch::Plus ? "+" : "-";
    row.n = n;
    row.analytic =
        detached ? jc_detached_energy(p) : jc_energy(p, n, branch);
    row.dense = take_nearest(row.analytic);
    row.abs_diff = std::abs(row.dense - row.analytic);
    row.detached = detached;
    check.max_abs_diff = std::max(check.max_abs_diff, row.abs_diff);
    if (row.abs_diff > tol) check.pass = false;
    check.matches.push_back(row);
  };
  const int top = space.n_max() - guard.g;
  for (int n = 0; n <= top; ++n) match(Branch::Plus, n, false);
  for (int n = 0; n <= top; ++n) match(Branch::Minus, n, false);
  match(Branch::Minus, 0, true);
  check.artifacts.assign(unmatched.begin(), unmatched.end());
  return check;
}

}  // namespace dynalg
