#pragma once

#include <cmath>
#include <cstdlib>

#include <Eigen/Dense>

// Reference implementations kept deliberately independent of the library:
// plain Taylor series plus scaling-and-squaring for the exponential, and a
// hand-written Kronecker product. They cross-check the library's spectral
// constructions through an entirely different numerical route.

inline Eigen::MatrixXcd oracle_expm(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  double scale = a.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
  int squarings = 0;
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 32; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

inline Eigen::MatrixXcd oracle_kron(const Eigen::MatrixXcd& a,
                                    const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}
