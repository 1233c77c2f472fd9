#include "dynalg/dressed.hpp"

#include <algorithm>
#include <cmath>

namespace dynalg {

DressedFamily make_dressed_family(const Operator& w,
                                  const CompositeSpace& space) {
  const Operator id_mode = mode_identity(space.fock);
  const Operator a = ladder_lowering(space.fock);
  return DressedFamily{
      w,
      dress(w, tensor(spin_identity(), number_op(space.fock))).with_label("N~"),
      dress(w, tensor(pauli(PauliAxis::Z), id_mode)).with_label("Sig3"),
      dress(w, tensor(spin_identity(), a)).with_label("b"),
      dress(w, tensor(spin_identity(), a).adjoint()).with_label("b+"),
      dress(w, tensor(pauli(PauliAxis::Plus), id_mode)).with_label("Sig+"),
      dress(w, tensor(pauli(PauliAxis::Minus), id_mode)).with_label("Sig-"),
  };
}

std::string eigenstate_label(int branch, int n) {
  return std::string("eig(") + (branch > 0 ? "+" : "-") + "," +
         std::to_string(n) + ")";
}

std::string bare_label(int spin_down, int n) {
  return std::string("bare(") + (spin_down ? "down" : "up") + "," +
         std::to_string(n) + ")";
}

namespace {

// Labels of basis states carrying at least min_weight of |v|^2, strongest
// first.
std::vector<std::string> support_labels(const LabeledBasis& basis,
                                        const Vector& v, double min_weight) {
  const Vector coeffs = basis.vectors.adjoint() * v;
  std::vector<std::pair<double, int>> weighted;
  for (int k = 0; k < coeffs.size(); ++k) {
    const double w = std::norm(coeffs(k));
    if (w >= min_weight) {
      weighted.emplace_back(w, k);
    }
  }
  std::sort(weighted.begin(), weighted.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::string> out;
  out.reserve(weighted.size());
  for (const auto& [w, k] : weighted) {
    out.push_back(basis.labels[static_cast<size_t>(k)]);
  }
  return out;
}

}  // namespace

CommutatorReport analyze_residual(const std::string& name,
                                  const Operator& delta, const Operator& guard,
                                  double tolerance, const LabeledBasis& basis,
                                  int max_defect_rank) {
  CommutatorReport report;
  report.name = name;
  report.tolerance = tolerance;

  const Matrix banded =
      guard.matrix() * delta.matrix() * guard.matrix();

  // Singular directions of the banded residual via its absolute square.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(banded.adjoint() * banded);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("analyze_residual: eigensolver failed");
  }
  const double defect_cut = std::sqrt(tolerance);

  Matrix deflated = banded;
  std::vector<std::string> support;
  for (int k = solver.eigenvalues().size() - 1; k >= 0; --k) {
    const double sigma = std::sqrt(std::max(0.0, solver.eigenvalues()(k)));
    if (sigma <= defect_cut) {
      break;  // ascending order: everything below is noise
    }
    ++report.defect_rank;
    const Vector v = solver.eigenvectors().col(k);
    const Vector u = (banded * v) / sigma;
    deflated -= (banded * v) * v.adjoint();
    for (const Vector& side : {v, u}) {
      for (const auto& label : support_labels(basis, side, 0.2)) {
        if (std::find(support.begin(), support.end(), label) ==
            support.end()) {
          support.push_back(label);
        }
      }
    }
  }

  report.residual = deflated.norm();
  report.defect_support = std::move(support);
  report.pass = report.residual <= tolerance &&
                report.defect_rank <= max_defect_rank;
  return report;
}

CommutatorReport analyze_residual_full(const std::string& name,
                                       const Operator& delta, double tolerance,
                                       const LabeledBasis& basis,
                                       int max_defect_rank) {
  return analyze_residual(name, delta, Operator::identity(delta.space()),
                          tolerance, basis, max_defect_rank);
}

}  // namespace dynalg
