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

#include "delaynet/lateral_model.hpp"

#include <stdexcept>

namespace delaynet {

void LateralParams::validate() const {
  const double fields[] = {c_f, c_r, l_f, l_r, l_s, m, I_z, v};
  for (double f : fields) {
    if (!(f > 0.0)) {
      throw std::invalid_argument(
          "LateralParams: all parameters must be strictly positive");
    }
  }
}

void DiscreteLti::validate() const {
  if (!(T_c > 0.0)) throw std::invalid_argument("DiscreteLti: T_c must be > 0");
  const int nn = n();
  if (A.cols() != nn) throw std::invalid_argument("DiscreteLti: A must be square");
  if (B.rows() != nn) throw std::invalid_argument("DiscreteLti: B row count != n");
  if (C.cols() != nn) throw std::invalid_argument("DiscreteLti: C column count != n");
  if (P_r.rows() != nn || P_r.cols() != 1) {
    throw std::invalid_argument("DiscreteLti: P_r must be n x 1");
  }

  Eigen::FullPivLU<Matrix> lu(A);
  if (!lu.isInvertible()) {
    throw std::invalid_argument(
        "DiscreteLti: A is not invertible; negative powers are undefined");
  }

  // Controllability of (A, B).
  Matrix ctrb(nn, nn * m());
  Matrix power = B;
  for (int j = 0; j < nn; ++j) {
    ctrb.block(0, j * m(), nn, m()) = power;
    power = A * power;
  }
  if (Eigen::FullPivLU<Matrix>(ctrb).rank() < nn) {
    throw std::invalid_argument("DiscreteLti: (A, B) is not controllable");
  }

  // Observability of (A, C).
  Matrix obsv(nn * p(), nn);
  Matrix row = C;
  for (int j = 0; j < nn; ++j) {
    obsv.block(j * p(), 0, p(), nn) = row;
    row = row * A;
  }
  if (Eigen::FullPivLU<Matrix>(obsv).rank() < nn) {
    throw std::invalid_argument("DiscreteLti: (A, C) is not observable");
  }
}

ContinuousLti build_lateral_continuous(const LateralParams& p) {
  p.validate();

  ContinuousLti c;
  c.A_c = Matrix::Zero(4, 4);
  c.A_c(0, 0) = -(p.c_f + p.c_r) / (p.m * p.v);
  c.A_c(0, 1) = -1.0 + (p.c_r * p.l_r - p.c_f * p.l_f) / (p.m * p.v * p.v);
  c.A_c(1, 0) = (p.c_r * p.l_r - p.c_f * p.l_f) / p.I_z;
  c.A_c(1, 1) = -(p.c_f * p.l_f * p.l_f + p.c_r * p.l_r * p.l_r) / (p.v * p.I_z);
  c.A_c(2, 1) = 1.0;
  c.A_c(3, 0) = p.v;
  c.A_c(3, 1) = p.l_s;
  c.A_c(3, 2) = p.v;

  c.B_c = Matrix::Zero(4, 1);
  c.B_c(0, 0) = p.c_f / (p.m * p.v);
  c.B_c(1, 0) = p.c_f * p.l_f / p.I_z;

  c.P_rc = Matrix::Zero(4, 1);
  c.P_rc(2, 0) = -p.v;
  c.P_rc(3, 0) = -p.v * p.l_s;
  return c;
}

double steady_state_steer(const LateralParams& p, double rho) {
  if (rho == 0.0) return 0.0;
  const ContinuousLti c = build_lateral_continuous(p);
  // At yaw rate r = v*rho the two fast states balance:
  //   [a00 b0; a10 b1] [beta; delta] = -r [a01; a11]
  Eigen::Matrix2d m;
  m << c.A_c(0, 0), c.B_c(0, 0), c.A_c(1, 0), c.B_c(1, 0);
  Eigen::Vector2d rhs;
  rhs << -p.v * rho * c.A_c(0, 1), -p.v * rho * c.A_c(1, 1);
  return m.fullPivLu().solve(rhs)(1);
}

}  // namespace delaynet
