#pragma once

#include <map>
#include <string>
#include <vector>

#include "dynalg/operator.hpp"
#include "dynalg/ops.hpp"

namespace dynalg {

// Image of the oscillator + spin generators under a model's dressing W:
// every member is W X W+ for the corresponding bare X.  Because W is only a
// co-isometry, the dressed set satisfies the bare algebra up to documented
// low-rank defects; verify_relations measures exactly that.
struct DressedFamily {
  Operator w;          // the dressing itself
  Operator number;     // W (1 x N) W+
  Operator spin3;      // W (sigma3 x 1) W+
  Operator lowering;   // W (1 x a) W+
  Operator raising;    // W (1 x a+) W+
  Operator spin_plus;  // W (sigma+ x 1) W+
  Operator spin_minus; // W (sigma- x 1) W+
};

DressedFamily make_dressed_family(const Operator& w,
                                  const CompositeSpace& space);

// Orthonormal labeled basis used to name defect directions: the dressed
// eigenstate family plus the bare states that complete it.  Labels look like
// "eig(+,3)" and "bare(down,0)".
struct LabeledBasis {
  std::vector<std::string> labels;
  Matrix vectors;  // column k <-> labels[k]

  // (branch, n) -> column for the dressed eigenstates; branch is +1 / -1.
  std::map<std::pair<int, int>, int> family;

  bool has_state(int branch, int n) const {
    return family.count({branch, n}) > 0;
  }
  Vector state(int branch, int n) const {
    return vectors.col(family.at({branch, n}));
  }
};

std::string eigenstate_label(int branch, int n);
std::string bare_label(int spin_down, int n);

// Result of checking one operator identity lhs = rhs.
//
// The residual operator is restricted to the guard band, its largest singular
// directions above sqrt(tolerance) are classified as defects (truncation or
// kernel artifacts), and the reported residual is what remains after
// removing them.  A check passes when that residual is within tolerance and
// the defect rank is at most max_defect_rank.
struct CommutatorReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  int defect_rank = 0;
  std::vector<std::string> defect_support;
  bool pass = false;
};

CommutatorReport analyze_residual(const std::string& name,
                                  const Operator& delta, const Operator& guard,
                                  double tolerance, const LabeledBasis& basis,
                                  int max_defect_rank = 2);

// Convenience for identities with no guard restriction (guard = identity).
CommutatorReport analyze_residual_full(const std::string& name,
                                       const Operator& delta, double tolerance,
                                       const LabeledBasis& basis,
                                       int max_defect_rank = 2);

}  // namespace dynalg
