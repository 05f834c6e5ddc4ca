#pragma once

#include "norts/types.hpp"

#include <Eigen/SVD>

#include <functional>

namespace norts {

/// Moore-Penrose pseudoinverse via SVD; singular values at or below rcond * sigma_max are dropped.
template <typename Derived>
MatrixX<typename Derived::Scalar> pseudo_inverse(const Eigen::MatrixBase<Derived>& a,
                                                 typename Derived::Scalar rcond = 1e-10) {
  using Scalar = typename Derived::Scalar;
  const Eigen::JacobiSVD<MatrixX<Scalar>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Scalar cutoff = sv.size() > 0 ? rcond * sv.maxCoeff() : Scalar(0);
  VectorX<Scalar> inv_sv(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) inv_sv[i] = sv[i] > cutoff ? Scalar(1) / sv[i] : Scalar(0);
  return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

struct NelderMeadOptions {
  double f_tolerance = 1e-10;  ///< spread of objective values across the simplex
  double x_tolerance = 1e-8;   ///< max-norm distance of every vertex from the best one
  int max_iterations = 500;
};

struct NelderMeadResult {
  Vector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Unconstrained Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
/// The initial simplex is x0 plus steps[i] along each coordinate axis.
NelderMeadResult nelder_mead(const std::function<double(const Vector&)>& objective, const Vector& x0,
                             const Vector& steps, const NelderMeadOptions& options = {});

}  // namespace norts
