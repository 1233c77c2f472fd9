#include "dynalg/operator.hpp"

#include <cmath>
#include <sstream>

namespace dynalg {

std::string to_string(const SpaceTag& tag) {
  std::ostringstream os;
  switch (tag.kind) {
    case SpaceKind::Mode:
      os << "mode(" << tag.levels << ")";
      break;
    case SpaceKind::Spin:
      os << "spin";
      break;
    case SpaceKind::Composite:
      os << "spin*mode(" << tag.levels << ")";
      break;
  }
  return os.str();
}

Operator::Operator(SpaceTag space, Matrix m, std::string label)
    : space_(space), mat_(std::move(m)), label_(std::move(label)) {
  if (mat_.rows() != space_.dim() || mat_.cols() != space_.dim()) {
    throw SpaceMismatch("Operator: matrix is " + std::to_string(mat_.rows()) +
                        "x" + std::to_string(mat_.cols()) +
                        " but the space " + to_string(space_) + " has dim " +
                        std::to_string(space_.dim()));
  }
}

Operator Operator::identity(SpaceTag space, std::string label) {
  return Operator(space, Matrix::Identity(space.dim(), space.dim()),
                  std::move(label));
}

Operator Operator::zero(SpaceTag space) {
  return Operator(space, Matrix::Zero(space.dim(), space.dim()), "0");
}

Operator Operator::scaled_identity(SpaceTag space, Complex z) {
  return Operator(space, z * Matrix::Identity(space.dim(), space.dim()));
}

Operator Operator::adjoint() const {
  return Operator(space_, mat_.adjoint(),
                  label_.empty() ? "" : label_ + "+");
}

Operator Operator::with_label(std::string label) const {
  return Operator(space_, mat_, std::move(label));
}

void require_same_space(const Operator& a, const Operator& b,
                        const char* where) {
  if (!(a.space() == b.space())) {
    throw SpaceMismatch(std::string(where) + ": operands live on " +
                        to_string(a.space()) + " and " + to_string(b.space()));
  }
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_space(*this, rhs, "operator+");
  mat_ += rhs.mat_;
  label_.clear();
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_space(*this, rhs, "operator-");
  mat_ -= rhs.mat_;
  label_.clear();
  return *this;
}

Operator operator+(Operator lhs, const Operator& rhs) {
  lhs += rhs;
  return lhs;
}

Operator operator-(Operator lhs, const Operator& rhs) {
  lhs -= rhs;
  return lhs;
}

Operator operator-(const Operator& a) { return Operator(a.space_, -a.mat_); }

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b, "operator*");
  return Operator(a.space_, a.mat_ * b.mat_);
}

Operator operator*(Complex z, const Operator& a) {
  return Operator(a.space_, z * a.mat_);
}

Operator operator*(const Operator& a, Complex z) { return z * a; }

Operator operator*(double z, const Operator& a) { return Complex(z, 0.0) * a; }

Operator operator*(const Operator& a, double z) { return Complex(z, 0.0) * a; }

double frobenius_norm(const Operator& a) { return a.matrix().norm(); }

double max_abs_entry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace dynalg
