#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dynalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr Complex kI{0.0, 1.0};

// Combining operators that live on different spaces.
struct SpaceMismatch final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input that was required to be (real) diagonal is not.
struct NotDiagonal final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input that was required to be Hermitian is not.
struct NotHermitian final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Spectrum/eigenstate request outside the valid (branch, n) family.
struct InvalidBranch final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mixing angle requested at a degenerate point (J = 0 on resonance).
struct ZeroCoupling final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Truncated bosonic mode, levels |0>..|n_max>.
struct FockSpace {
  int n_max;

  explicit FockSpace(int n) : n_max(n) {
    if (n < 1) {
      throw std::invalid_argument("FockSpace: n_max must be >= 1");
    }
  }
  int dim() const { return n_max + 1; }
};

// Two-level spin times a truncated mode.  Basis index = s*(n_max+1) + n,
// with s = 0 the upper (spin-up / "+") block, so 2x2 block matrices of mode
// operators read off directly.  This ordering is frozen and echoed in
// reports.
struct CompositeSpace {
  FockSpace fock;

  explicit CompositeSpace(FockSpace f) : fock(f) {}
  int n_max() const { return fock.n_max; }
  int dim() const { return 2 * fock.dim(); }
};

enum class SpaceKind { Mode, Spin, Composite };

// Structural tag carried by every operator; binary operations require equal
// tags.  "levels" is the mode dimension (2 for a bare spin).
struct SpaceTag {
  SpaceKind kind;
  int levels;

  int dim() const {
    switch (kind) {
      case SpaceKind::Mode:
        return levels;
      case SpaceKind::Spin:
        return 2;
      case SpaceKind::Composite:
        return 2 * levels;
    }
    return 0;
  }
  bool operator==(const SpaceTag&) const = default;
};

std::string to_string(const SpaceTag& tag);

inline SpaceTag tag_of(const FockSpace& s) {
  return {SpaceKind::Mode, s.dim()};
}
inline SpaceTag tag_of(const CompositeSpace& s) {
  return {SpaceKind::Composite, s.fock.dim()};
}
inline SpaceTag spin_tag() { return {SpaceKind::Spin, 2}; }

// Number of truncation levels excluded from verified statements.
struct GuardBand {
  int g = 3;
};

}  // namespace dynalg
