#pragma once

#include <string>
#include <utility>

#include "dynalg/spaces.hpp"

namespace dynalg {

// Dense operator on a tagged finite-dimensional space.  Instances are
// immutable; all arithmetic returns new values, so concurrent reads are safe.
class Operator {
 public:
  Operator(SpaceTag space, Matrix m, std::string label = "");

  static Operator identity(SpaceTag space, std::string label = "1");
  static Operator zero(SpaceTag space);
  static Operator scaled_identity(SpaceTag space, Complex z);

  const SpaceTag& space() const { return space_; }
  const Matrix& matrix() const { return mat_; }
  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  Operator adjoint() const;
  Operator with_label(std::string label) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);

  friend Operator operator+(Operator lhs, const Operator& rhs);
  friend Operator operator-(Operator lhs, const Operator& rhs);
  friend Operator operator-(const Operator& a);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex z, const Operator& a);
  friend Operator operator*(const Operator& a, Complex z);
  friend Operator operator*(double z, const Operator& a);
  friend Operator operator*(const Operator& a, double z);

 private:
  SpaceTag space_;
  Matrix mat_;
  std::string label_;
};

// Throws SpaceMismatch unless a and b carry the same tag.
void require_same_space(const Operator& a, const Operator& b,
                        const char* where);

double frobenius_norm(const Operator& a);
double max_abs_entry(const Matrix& m);

}  // namespace dynalg
