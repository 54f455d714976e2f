// Copyright 2026 The Delaynet Authors
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

#include "delaynet/dlqr.hpp"

#include <stdexcept>

namespace delaynet {

Matrix dlqr(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& R) {
  const int n = static_cast<int>(A.rows());
  const int m = static_cast<int>(B.cols());
  if (A.cols() != n || B.rows() != n || Q.rows() != n || Q.cols() != n ||
      R.rows() != m || R.cols() != m) {
    throw std::invalid_argument("dlqr: dimensions do not conform");
  }
  if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-9 ||
      (R - R.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("dlqr: Q and R must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> r_eigs(R);
  if (r_eigs.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("dlqr: R must be positive definite");
  }
  if (Eigen::SelfAdjointEigenSolver<Matrix>(Q).eigenvalues().minCoeff() < -1e-12) {
    throw std::invalid_argument("dlqr: Q must be positive semidefinite");
  }

  constexpr int kMaxIterations = 100000;
  constexpr double kTolerance = 1e-12;
  Matrix P = Q;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const Matrix BtP = B.transpose() * P;
    const Matrix gain = (R + BtP * B).ldlt().solve(BtP * A);
    const Matrix next = Q + A.transpose() * P * (A - B * gain);
    const double scale = std::max(1.0, P.cwiseAbs().maxCoeff());
    const double residual = (next - P).cwiseAbs().maxCoeff() / scale;
    P = ((next + next.transpose()) / 2.0).eval();
    if (residual < kTolerance) {
      const Matrix BtPf = B.transpose() * P;
      return -((R + BtPf * B).ldlt().solve(BtPf * A));
    }
  }
  throw std::runtime_error("dlqr: Riccati iteration failed to converge");
}

}  // namespace delaynet
