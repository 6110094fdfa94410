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

#include "drbqo/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace drbqo {

namespace {

void check_positive_finite(const Eigen::VectorXd& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) {
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly positive and finite");
    }
  }
}

}  // namespace

void LengthScales::validate() const {
  check_positive_finite(theta, "length scales (theta)");
  check_positive_finite(psi, "length scales (psi)");
}

void KernelSpec::validate() const {
  lengthscales.validate();
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("kernel amplitude must be strictly positive");
  }
}

KernelSpec make_se_kernel(int design_dim, int context_dim, double ell,
                          double amplitude) {
  KernelSpec spec;
  spec.lengthscales.theta = Eigen::VectorXd::Constant(design_dim, ell);
  spec.lengthscales.psi = Eigen::VectorXd::Constant(context_dim, ell);
  spec.amplitude = amplitude;
  spec.validate();
  return spec;
}

double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& w, const Eigen::VectorXd& x2,
                   const Eigen::VectorXd& w2) {
  const auto& ls = spec.lengthscales;
  if (x.size() != ls.theta.size() || x2.size() != ls.theta.size() ||
      w.size() != ls.psi.size() || w2.size() != ls.psi.size()) {
    throw std::invalid_argument("kernel_eval: dimension mismatch with length scales");
  }
  double d2 = ((x - x2).array() / ls.theta.array()).square().sum() +
              ((w - w2).array() / ls.psi.array()).square().sum();
  return spec.amplitude * std::exp(-d2);
}

Eigen::MatrixXd kernel_cross(const KernelSpec& spec, const Eigen::MatrixXd& XA,
                             const Eigen::MatrixXd& WA, const Eigen::MatrixXd& XB,
                             const Eigen::MatrixXd& WB) {
  const auto& ls = spec.lengthscales;
  if (XA.cols() != ls.theta.size() || XB.cols() != ls.theta.size() ||
      WA.cols() != ls.psi.size() || WB.cols() != ls.psi.size() ||
      XA.rows() != WA.rows() || XB.rows() != WB.rows()) {
    throw std::invalid_argument("kernel_cross: dimension mismatch");
  }
  const Eigen::Index na = XA.rows();
  const Eigen::Index nb = XB.rows();
  Eigen::ArrayXXd xa = XA.array().rowwise() / ls.theta.transpose().array();
  Eigen::ArrayXXd xb = XB.array().rowwise() / ls.theta.transpose().array();
  Eigen::ArrayXXd wa = WA.array().rowwise() / ls.psi.transpose().array();
  Eigen::ArrayXXd wb = WB.array().rowwise() / ls.psi.transpose().array();

  Eigen::MatrixXd out(na, nb);
  for (Eigen::Index j = 0; j < nb; ++j) {
    Eigen::ArrayXd d2 = (xa.rowwise() - xb.row(j)).square().rowwise().sum() +
                        (wa.rowwise() - wb.row(j)).square().rowwise().sum();
    out.col(j) = (spec.amplitude * (-d2).exp()).matrix();
  }
  return out;
}

Eigen::MatrixXd kernel_gram(const KernelSpec& spec, const Eigen::MatrixXd& X,
                            const Eigen::MatrixXd& W) {
  if (X.rows() == 0) {
    throw std::invalid_argument("kernel_gram: point list must be nonempty");
  }
  Eigen::MatrixXd K = kernel_cross(spec, X, W, X, W);
  // Enforce exact symmetry and diagonal; the elementwise path is symmetric
  // only up to rounding.
  K = (0.5 * (K + K.transpose())).eval();
  K.diagonal().setConstant(spec.amplitude);
  return K;
}

}  // namespace drbqo
