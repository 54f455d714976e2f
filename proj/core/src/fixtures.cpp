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

#include "delaynet/fixtures.hpp"

namespace delaynet {
namespace fixtures {

LateralParams sim_vehicle_params() {
  LateralParams p;
  p.c_f = 35696.0;
  p.c_r = 32299.0;
  p.l_f = 1.1;
  p.l_r = 1.25;
  p.l_s = 2.5;
  p.m = 850.8;
  p.I_z = 750.0;
  p.v = 5.0;
  return p;
}

LateralParams field_vehicle_params() {
  LateralParams p;
  p.c_f = 121100.0;
  p.c_r = 199831.0;
  p.l_f = 1.17;
  p.l_r = 1.48;
  p.l_s = 3.0;
  p.m = 1570.0;
  p.I_z = 2700.0;
  p.v = 3.5;
  return p;
}

DelayBounds sim_delay_bounds() { return DelayBounds{3, 5, 4, 7}; }

DelayBounds field_delay_bounds() { return DelayBounds{4, 8, 6, 7}; }

Gains sim_study_gains() {
  Gains g;
  g.K = Matrix::Zero(1, 4);
  g.K << -0.0303, -0.0221, -0.696, -0.1810;
  g.L = Matrix::Zero(4, 4);
  g.L << -0.5483, -0.006, 0.0, 0.0,
          0.0197, -0.6681, 0.0, 0.0,
          0.0011, 0.0184, 0.25, 0.0,
          0.1275, 0.0474, 0.25, 0.25;
  return g;
}

Matrix sim_study_lqr_gain() {
  Matrix K(1, 4);
  K << -0.0309, -0.0210, -0.5149, -0.1810;
  return K;
}

Gains field_study_gains() {
  Gains g;
  g.K = Matrix::Zero(1, 3);
  g.K << -0.0249, -0.7709, -0.2594;
  g.L = Matrix::Zero(3, 3);
  g.L << -0.6545, 0.0, 0.0,
         -0.0141, 0.3, 0.0,
          0.0492, 0.15, 0.3;
  return g;
}

Matrix field_study_lqr_gain() {
  Matrix K(1, 3);
  K << -0.0249, -0.7709, -0.2594;
  return K;
}

Matrix demo_tuned_K() {
  Matrix K(1, 4);
  K << -0.07029433, -0.04513188, -0.71966072, -0.21087729;
  return K;
}

Matrix demo_tuned_L(const DiscreteLti& model) {
  return model.A - 0.15 * Matrix::Identity(model.n(), model.n());
}

}  // namespace fixtures
}  // namespace delaynet
