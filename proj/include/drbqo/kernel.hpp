// Copyright 2026 The drbqo Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#ifndef DRBQO_KERNEL_HPP_
#define DRBQO_KERNEL_HPP_

#include <Eigen/Core>

namespace drbqo {

/// Per-dimension length scales of the squared-exponential kernel on the
/// product space of designs x (theta, d entries) and contexts w (psi,
/// m entries). All entries must be strictly positive and finite.
struct LengthScales {
  Eigen::VectorXd theta;  // design dimensions
  Eigen::VectorXd psi;    // context dimensions

  int design_dim() const { return static_cast<int>(theta.size()); }
  int context_dim() const { return static_cast<int>(psi.size()); }

  /// Throws std::invalid_argument if any entry is non-positive or non-finite.
  void validate() const;
};

/// Squared-exponential kernel
///   k(x,w; x',w') = amplitude * exp(-sum_i (x_i-x'_i)^2/theta_i^2
///                                   -sum_j (w_j-w'_j)^2/psi_j^2).
/// Note the exponent carries no 1/2 factor; the spectral density used for
/// random features (rff.hpp) follows the same convention.
struct KernelSpec {
  LengthScales lengthscales;
  double amplitude = 1.0;  // prior variance k(z,z)

  void validate() const;
};

/// Convenience constructor: isotropic length scale `ell` on both spaces.
KernelSpec make_se_kernel(int design_dim, int context_dim, double ell,
                          double amplitude = 1.0);

/// Kernel value between joint points (x,w) and (x2,w2).
double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& w, const Eigen::VectorXd& x2,
                   const Eigen::VectorXd& w2);

/// Gram matrix over joint points given as rows of X (t x d) and W (t x m).
/// Symmetric PSD with diagonal equal to the amplitude.
Eigen::MatrixXd kernel_gram(const KernelSpec& spec, const Eigen::MatrixXd& X,
                            const Eigen::MatrixXd& W);

/// Cross-kernel matrix: entry (i,j) = k(A_i; B_j) for joint rows.
Eigen::MatrixXd kernel_cross(const KernelSpec& spec, const Eigen::MatrixXd& XA,
                             const Eigen::MatrixXd& WA, const Eigen::MatrixXd& XB,
                             const Eigen::MatrixXd& WB);

}  // namespace drbqo

#endif  // DRBQO_KERNEL_HPP_
