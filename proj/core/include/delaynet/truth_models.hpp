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

#ifndef DELAYNET_TRUTH_MODELS_HPP
#define DELAYNET_TRUTH_MODELS_HPP

#include "delaynet/lateral_model.hpp"
#include "delaynet/uncertainty.hpp"

namespace delaynet {

// One step of the perturbed linear plant:
//   x+ = (A + dA) x + (B + dB) u + P_r rho
// with (dA, dB) freshly sampled. Any delay on u is the caller's business.
Vector step_linear_truth(const DiscreteLti& model, const Vector& x, const Vector& u,
                         double rho, const UncertaintyModel& unc, Rng& rng);

// Same step with explicit perturbation terms.
Vector step_linear_perturbed(const DiscreteLti& model, const Vector& x, const Vector& u,
                             double rho, const Matrix& dA, const Matrix& dB);

// Nonlinear single-track truth model. Tire lateral force saturates as
//   F_y = c * alpha_sat * atan(alpha / alpha_sat),
// which recovers the linear law c * alpha as alpha_sat grows.
struct NonlinearTruthParams {
  LateralParams lateral;
  double alpha_sat;  // slip angle scale of the saturation (rad), > 0

  void validate() const;
};

// Integrates the nonlinear model over one sample period with classical RK4
// (fixed substeps, held u and rho). State/input layout matches the linear
// lateral model.
Vector step_nonlinear_truth(const NonlinearTruthParams& p, const Vector& x, double steer,
                            double rho, double T_c);

// Continuous-time right-hand side of the nonlinear model; exposed for tests.
Vector nonlinear_truth_rhs(const NonlinearTruthParams& p, const Vector& x, double steer,
                           double rho);

}  // namespace delaynet

#endif  // DELAYNET_TRUTH_MODELS_HPP
