#include "dynalg/so4.hpp"

#include <cmath>
#include <stdexcept>

namespace dynalg {

Su11Sector build_su11_sector(const DressedFamily& family) {
  const Operator k3 =
      (family.number + Operator::scaled_identity(family.number.space(), 0.5))
          .with_label("K3");
  // xi(K3) = sqrt(N~ + 1) as a spectral function of the dressed number
  // operator; its eigenvalues are nonnegative integers (the truncation-edge
  // defect of N~ only lowers one of them to 0), so sqrt is safe.
  const Operator xi = hermitian_function(
      family.number + Operator::identity(family.number.space()),
      [](double v) { return std::sqrt(std::max(0.0, v)); });
  const Operator kp = (family.raising * xi).with_label("K+");
  const Operator km = (xi * family.lowering).with_label("K-");
  const Operator k1 = (0.5 * (kp + km)).with_label("K1");
  const Operator k2 = ((-0.5 * kI) * (kp - km)).with_label("K2");
  return {k3, kp, km, k1, k2};
}

Su2Sector build_su2_sector(const DressedFamily& family) {
  const Operator s3 = (0.5 * family.spin3).with_label("S3");
  const Operator sp = family.spin_plus.with_label("S+");
  const Operator sm = family.spin_minus.with_label("S-");
  const Operator s1 = (0.5 * (sp + sm)).with_label("S1");
  const Operator s2 = ((-0.5 * kI) * (sp - sm)).with_label("S2");
  return {s3, sp, sm, s1, s2};
}

GeneratorSet build_so4(const DressedFamily& family) {
  Su11Sector k = build_su11_sector(family);
  Su2Sector s = build_su2_sector(family);
  // Analytic continuation Kt_1 = i K1, Kt_2 = i K2 turns the su(1,1) sector
  // into a (complexified) su(2); sums and differences with the spin sector
  // then close into two commuting su(2) copies.
  const Operator kt1 = kI * k.k1;
  const Operator kt2 = kI * k.k2;
  GeneratorSet out{family,
                   k,
                   s,
                   (kt1 + s.s1).with_label("I1"),
                   (kt2 + s.s2).with_label("I2"),
                   (k.k3 + s.s3).with_label("I3"),
                   (kt1 - s.s1).with_label("R1"),
                   (kt2 - s.s2).with_label("R2"),
                   (k.k3 - s.s3).with_label("R3")};
  return out;
}

namespace {

Operator zero_like(const GeneratorSet& g) {
  return Operator::zero(g.k.k3.space());
}

Operator identity_like(const GeneratorSet& g) {
  return Operator::identity(g.k.k3.space());
}

const Operator& pick_i(const GeneratorSet& g, int i) {
  switch (i) {
    case 1:
      return g.i1;
    case 2:
      return g.i2;
    default:
      return g.i3;
  }
}

const Operator& pick_r(const GeneratorSet& g, int i) {
  switch (i) {
    case 1:
      return g.r1;
    case 2:
      return g.r2;
    default:
      return g.r3;
  }
}

const Operator& pick_k(const GeneratorSet& g, int i) {
  switch (i) {
    case 1:
      return g.k.k1;
    case 2:
      return g.k.k2;
    default:
      return g.k.k3;
  }
}

const Operator& pick_s(const GeneratorSet& g, int i) {
  switch (i) {
    case 1:
      return g.s.s1;
    case 2:
      return g.s.s2;
    default:
      return g.s.s3;
  }
}

// Levi-Civita eps_{ijk} with k the remaining index; 0 when i == j.
int levi_civita(int i, int j) {
  if (i == j) return 0;
  // (i, j, k) cyclic of (1, 2, 3) -> +1, anticyclic -> -1
  return ((j - i + 3) % 3 == 1) ? +1 : -1;
}

int third_index(int i, int j) { return 6 - i - j; }

}  // namespace

std::vector<Relation> primitive_relations() {
  std::vector<Relation> t;
  auto fam = [](const GeneratorSet& g) -> const DressedFamily& {
    return g.family;
  };
  t.push_back({"[N~,b]=-b",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).number, fam(g).lowering);
               },
               [fam](const GeneratorSet& g) { return -fam(g).lowering; }});
  t.push_back({"[N~,b+]=b+",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).number, fam(g).raising);
               },
               [fam](const GeneratorSet& g) { return fam(g).raising; }});
  t.push_back({"[b,b+]=1",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).lowering, fam(g).raising);
               },
               [](const GeneratorSet& g) { return identity_like(g); }});
  t.push_back({"[Sig3,Sig+]=2Sig+",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).spin3, fam(g).spin_plus);
               },
               [fam](const GeneratorSet& g) { return 2.0 * fam(g).spin_plus; }});
  t.push_back({"[Sig3,Sig-]=-2Sig-",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).spin3, fam(g).spin_minus);
               },
               [fam](const GeneratorSet& g) {
                 return -2.0 * fam(g).spin_minus;
               }});
  t.push_back({"[Sig+,Sig-]=Sig3",
               [fam](const GeneratorSet& g) {
                 return commutator(fam(g).spin_plus, fam(g).spin_minus);
               },
               [fam](const GeneratorSet& g) { return fam(g).spin3; }});
  return t;
}

std::vector<Relation> algebra_relations() {
  std::vector<Relation> t;

  // su(1,1): [K3, K+-] = +-K+-, [K+, K-] = -2 K3
  t.push_back({"[K3,K+]=K+",
               [](const GeneratorSet& g) { return commutator(g.k.k3, g.k.kp); },
               [](const GeneratorSet& g) { return g.k.kp; }});
  t.push_back({"[K3,K-]=-K-",
               [](const GeneratorSet& g) { return commutator(g.k.k3, g.k.km); },
               [](const GeneratorSet& g) { return -g.k.km; }});
  t.push_back({"[K+,K-]=-2K3",
               [](const GeneratorSet& g) { return commutator(g.k.kp, g.k.km); },
               [](const GeneratorSet& g) { return -2.0 * g.k.k3; }});

  // su(2): [S3, S+-] = +-S+-, [S+, S-] = 2 S3
  t.push_back({"[S3,S+]=S+",
               [](const GeneratorSet& g) { return commutator(g.s.s3, g.s.sp); },
               [](const GeneratorSet& g) { return g.s.sp; }});
  t.push_back({"[S3,S-]=-S-",
               [](const GeneratorSet& g) { return commutator(g.s.s3, g.s.sm); },
               [](const GeneratorSet& g) { return -g.s.sm; }});
  t.push_back({"[S+,S-]=2S3",
               [](const GeneratorSet& g) { return commutator(g.s.sp, g.s.sm); },
               [](const GeneratorSet& g) { return 2.0 * g.s.s3; }});

  // The two sectors commute.
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      t.push_back({"[S" + std::to_string(i) + ",K" + std::to_string(j) + "]=0",
                   [i, j](const GeneratorSet& g) {
                     return commutator(pick_s(g, i), pick_k(g, j));
                   },
                   [](const GeneratorSet& g) { return zero_like(g); }});
    }
  }

  // so(4) structure: [I_i, I_j] = i eps I_k, [R_i, R_j] = i eps I_k,
  // [I_i, R_j] = i eps R_k, and the commuting Cartan pair [I3, R3] = 0.
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
    const int k = third_index(i, j);
    t.push_back({"[I" + std::to_string(i) + ",I" + std::to_string(j) + "]=iI" +
                     std::to_string(k),
                 [i, j](const GeneratorSet& g) {
                   return commutator(pick_i(g, i), pick_i(g, j));
                 },
                 [k](const GeneratorSet& g) { return kI * pick_i(g, k); }});
    t.push_back({"[R" + std::to_string(i) + ",R" + std::to_string(j) + "]=iI" +
                     std::to_string(k),
                 [i, j](const GeneratorSet& g) {
                   return commutator(pick_r(g, i), pick_r(g, j));
                 },
                 [k](const GeneratorSet& g) { return kI * pick_i(g, k); }});
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const int eps = levi_civita(i, j);
      std::string name = "[I" + std::to_string(i) + ",R" + std::to_string(j) +
                         "]=";
      Relation rel;
      if (eps == 0) {
        name += "0";
        rel.rhs = [](const GeneratorSet& g) { return zero_like(g); };
      } else {
        const int k = third_index(i, j);
        name += (eps > 0 ? "iR" : "-iR") + std::to_string(k);
        rel.rhs = [eps, k](const GeneratorSet& g) {
          return (static_cast<double>(eps) * kI) * pick_r(g, k);
        };
      }
      rel.name = std::move(name);
      rel.lhs = [i, j](const GeneratorSet& g) {
        return commutator(pick_i(g, i), pick_r(g, j));
      };
      // Both Cartan generators are diagonal in the eigenstate family; their
      // commutator vanishes to rounding, not merely to the run tolerance.
      if (i == 3 && j == 3) rel.tolerance = 1e-12;
      t.push_back(std::move(rel));
    }
  }
  return t;
}

std::vector<Relation> full_relation_table() {
  std::vector<Relation> t = primitive_relations();
  std::vector<Relation> alg = algebra_relations();
  t.insert(t.end(), std::make_move_iterator(alg.begin()),
           std::make_move_iterator(alg.end()));
  return t;
}

std::vector<CommutatorReport> verify_relations(
    const GeneratorSet& gens, const std::vector<Relation>& table,
    const Operator& guard, double default_tolerance,
    const LabeledBasis& basis) {
  std::vector<CommutatorReport> reports;
  reports.reserve(table.size());
  for (const Relation& rel : table) {
    const double tol =
        rel.tolerance > 0.0 ? rel.tolerance : default_tolerance;
    reports.push_back(analyze_residual(
        rel.name, rel.lhs(gens) - rel.rhs(gens), guard, tol, basis));
  }
  return reports;
}

MatrixElementTable matrix_element_table(const GeneratorSet& gens,
                                        const LabeledBasis& basis, int n_lo,
                                        int n_hi, int n_max, int g) {
  if (n_lo < 0 || n_hi < n_lo || n_hi + 1 > n_max - g) {
    throw std::out_of_range(
        "matrix_element_table: n range (targets included) must stay inside "
        "the guard band");
  }
  MatrixElementTable table;

  struct Gen {
    const char* name;
    const Operator* op;
    int alpha;  // 0 for I, 1 for R
  };
  const std::vector<Gen> ladder_gens = {{"I1", &gens.i1, 0},
                                        {"I2", &gens.i2, 0},
                                        {"R1", &gens.r1, 1},
                                        {"R2", &gens.r2, 1}};

  auto element = [&](const Operator& op, int b_out, int n_out, int b_in,
                     int n_in) -> Complex {
    const Vector out = basis.state(b_out, n_out);
    const Vector in = basis.state(b_in, n_in);
    return out.dot(op.matrix() * in);  // Eigen dot conjugates the left factor
  };

  for (const Gen& gen : ladder_gens) {
    const double sign_a = (gen.alpha == 0) ? 1.0 : -1.0;  // (-1)^alpha
    const bool is_a1 = gen.name[1] == '1';
    for (int branch : {+1, -1}) {
      for (int n = n_lo; n <= n_hi; ++n) {
        if (!basis.has_state(branch, n)) continue;
        auto push = [&](int b_t, int n_t, Complex expected) {
          if (!basis.has_state(b_t, n_t)) return;  // truncated family edge
          ElementCheck check;
          check.generator = gen.name;
          check.branch = branch;
          check.n = n;
          check.target = eigenstate_label(b_t, n_t);
          check.expected = expected;
          check.computed = element(*gen.op, b_t, n_t, branch, n);
          check.abs_err = std::abs(check.computed - check.expected);
          table.max_offdiag_err =
              std::max(table.max_offdiag_err, check.abs_err);
          table.elements.push_back(std::move(check));
        };
        const double up = 0.5 * (n + 1.0);
        const double down = 0.5 * n;
        if (is_a1) {
          push(branch, n + 1, kI * up);
          push(branch, n - 1, kI * down);
          push(-branch, n, Complex(sign_a * 0.5, 0.0));
        } else {
          push(branch, n + 1, Complex(up, 0.0));
          push(branch, n - 1, Complex(-down, 0.0));
          push(-branch, n, branch * sign_a * 0.5 * kI);
        }
      }
    }
  }

  const std::vector<Gen> cartan_gens = {{"I3", &gens.i3, 0},
                                        {"R3", &gens.r3, 1}};
  for (const Gen& gen : cartan_gens) {
    const double sign_a = (gen.alpha == 0) ? 1.0 : -1.0;
    for (int branch : {+1, -1}) {
      std::vector<double> diag;
      for (int n = n_lo; n <= n_hi; ++n) {
        if (!basis.has_state(branch, n)) continue;
        diag.push_back(
            element(*gen.op, branch, n, branch, n).real() -
            static_cast<double>(n));
      }
      if (diag.size() < 2) continue;
      CartanDiagonal row;
      row.generator = gen.name;
      row.branch = branch;
      row.offset_computed = diag.front();
      row.offset_closed_form = 1.0 + branch * sign_a * 0.5;
      row.slope_deviation = 0.0;
      for (size_t k = 1; k < diag.size(); ++k) {
        // diag already has n subtracted; a unit slope leaves it constant.
        row.slope_deviation =
            std::max(row.slope_deviation, std::abs(diag[k] - diag[k - 1]));
      }
      table.diagonals.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace dynalg
