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

#ifndef DELAYNET_LATERAL_MODEL_HPP
#define DELAYNET_LATERAL_MODEL_HPP

#include <Eigen/Dense>

namespace delaynet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Single-track lateral dynamics parameters. State ordering throughout is
// [slip angle beta, yaw rate r, relative heading psi_L, lateral offset y_L],
// with the heading/offset measured against the reference path at preview
// distance l_s.
struct LateralParams {
  double c_f;  // front axle cornering stiffness (N/rad)
  double c_r;  // rear axle cornering stiffness (N/rad)
  double l_f;  // CG to front axle (m)
  double l_r;  // CG to rear axle (m)
  double l_s;  // preview distance (m)
  double m;    // vehicle mass (kg)
  double I_z;  // yaw inertia (kg m^2)
  double v;    // longitudinal speed (m/s); the model is singular at v = 0

  // Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

// Continuous-time model: x' = A_c x + B_c u + P_rc * rho, where rho is the
// path curvature input.
struct ContinuousLti {
  Matrix A_c;
  Matrix B_c;
  Matrix P_rc;

  int n() const { return static_cast<int>(A_c.rows()); }
  int m() const { return static_cast<int>(B_c.cols()); }
};

// Discrete-time model x(k+1) = A x(k) + B u(k) + P_r rho(k), y = C x,
// obtained by zero-order-hold sampling at T_c.
struct DiscreteLti {
  Matrix A;
  Matrix B;
  Matrix C;
  Matrix P_r;
  double T_c{0.0};

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(B.cols()); }
  int p() const { return static_cast<int>(C.rows()); }

  // Checks T_c > 0, dimension conformity, invertibility of A, and rank of
  // the controllability/observability matrices. Throws on failure.
  void validate() const;
};

// Builds the continuous lateral model from physical parameters.
// Rejects non-positive parameters (the matrices contain 1/v terms).
ContinuousLti build_lateral_continuous(const LateralParams& p);

// Steady-state steering angle that holds a constant-curvature path (the
// classic cornering equilibrium of the two fast states). Used as a
// feed-forward term so feedback only has to handle transients.
double steady_state_steer(const LateralParams& p, double rho);

}  // namespace delaynet

#endif  // DELAYNET_LATERAL_MODEL_HPP
