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

#include "delaynet/discretize.hpp"

#include <cmath>
#include <stdexcept>

namespace delaynet {

Matrix matrix_exp(const Matrix& M) {
  if (M.rows() != M.cols()) {
    throw std::invalid_argument("matrix_exp: matrix must be square");
  }
  const int n = static_cast<int>(M.rows());

  // Scale so that ||M/2^s||_inf <= 0.5, then square s times.
  const double norm = M.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) {
    s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Matrix A = M / std::ldexp(1.0, s);

  // Diagonal Pade(6, 6): exp(A) ~ Q^{-1} P with
  //   P = sum c_j A^j, Q = sum (-1)^j c_j A^j.
  static const double c[7] = {1.0,        1.0 / 2.0,   5.0 / 44.0, 1.0 / 66.0,
                              1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
  Matrix term = Matrix::Identity(n, n);
  Matrix P = c[0] * term;
  Matrix Q = c[0] * term;
  double sign = 1.0;
  for (int j = 1; j <= 6; ++j) {
    term = term * A;
    sign = -sign;
    P += c[j] * term;
    Q += sign * c[j] * term;
  }
  Matrix E = Q.fullPivLu().solve(P);
  for (int i = 0; i < s; ++i) E = E * E;

  if (!E.allFinite()) {
    throw std::runtime_error("matrix_exp: result is not finite");
  }
  return E;
}

DiscreteLti discretize_zoh(const ContinuousLti& c, const Matrix& C, double T_c) {
  if (!(T_c > 0.0)) throw std::invalid_argument("discretize_zoh: T_c must be > 0");
  const int n = c.n();
  const int m = c.m();
  if (c.B_c.rows() != n || c.P_rc.rows() != n || c.P_rc.cols() != 1) {
    throw std::invalid_argument("discretize_zoh: input dimensions do not conform");
  }

  // Augmented exponential: exp([A_c, [B_c P_rc]; 0, 0] T) carries both the
  // state transition and the ZOH input integrals.
  const int aug = n + m + 1;
  Matrix M = Matrix::Zero(aug, aug);
  M.topLeftCorner(n, n) = c.A_c;
  M.block(0, n, n, m) = c.B_c;
  M.block(0, n + m, n, 1) = c.P_rc;
  const Matrix E = matrix_exp(M * T_c);

  DiscreteLti d;
  d.A = E.topLeftCorner(n, n);
  d.B = E.block(0, n, n, m);
  d.P_r = E.block(0, n + m, n, 1);
  d.C = C;
  d.T_c = T_c;

  if (!Eigen::FullPivLU<Matrix>(d.A).isInvertible()) {
    throw std::runtime_error(
        "discretize_zoh: discrete A is singular and cannot host a predictor");
  }
  return d;
}

DiscreteLti discretize_zoh(const ContinuousLti& c, double T_c) {
  return discretize_zoh(c, Matrix::Identity(c.n(), c.n()), T_c);
}

}  // namespace delaynet
