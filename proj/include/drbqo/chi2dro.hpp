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

#ifndef DRBQO_CHI2DRO_HPP_
#define DRBQO_CHI2DRO_HPP_

#include <utility>

#include <Eigen/Core>

namespace drbqo {

/// The chi-square ambiguity ball of radius rho around the uniform empirical
/// distribution on n atoms:
///
///   P_{n,rho} = { p in simplex_n : n * ||p||^2 <= 2*rho + 1 }.
///
/// rho = 0 collapses the ball to the empirical distribution itself;
/// rho >= (n-1)/2 expands it to the whole simplex.
struct ChiSquareBall {
  int n = 0;
  double rho = 0.0;

  bool covers_simplex() const { return rho >= 0.5 * (n - 1); }
  bool contains(const Eigen::VectorXd& p, double slack = 1e-9) const;
};

/// Solution of  min_{p in P_{n,rho}} p . l  together with the KKT duals.
///
/// The weights satisfy, up to floating point:
///   lambda * n * p_i = max(-l_i - eta, 0)
///   sum_i p_i = 1,   n * ||p||^2 <= 2*rho + 1 (+1e-6)
/// and the value never exceeds the plain empirical mean of l.
struct RobustSolution {
  Eigen::VectorXd weights;   // optimal p in the simplex
  double value = 0.0;        // p . l
  double lambda = 0.0;       // dual of the ball constraint
  double eta = 0.0;          // dual of the sum-to-one constraint
  int iterations = 0;        // bisection steps taken
};

/// Minimizes the weighted mean p . l over the chi-square ball of radius rho.
///
/// Solved in closed form through the KKT system: for a trial value of the
/// ball multiplier lambda, eta is recovered by scanning active-set sizes on
/// the sorted losses, and lambda itself is found by bisection using the fact
/// that n*||p(lambda)||^2 decreases in lambda. `tol` is the absolute width of
/// the final lambda bracket.
///
/// Degenerate inputs short-circuit: rho = 0 or a constant loss vector return
/// the uniform weights directly.
RobustSolution chi2_robust_solve(const Eigen::VectorXd& l, double rho,
                                 double tol = 1e-10);

/// Two-sided bound on the gap between the empirical mean of l and the robust
/// value, from the variance-sandwich inequality:
///
///   max(sqrt(2*rho*s2) - 2*M*rho, 0) <= mean(l) - value <= sqrt(2*rho*s2)
///
/// where s2 is the (1/n-normalized) empirical variance of l and
/// M = max(l) - min(l). Returns {lower, upper}.
std::pair<double, double> chi2_sandwich_bounds(const Eigen::VectorXd& l, double rho);

}  // namespace drbqo

#endif  // DRBQO_CHI2DRO_HPP_
