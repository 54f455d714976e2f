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

#include "delaynet/truth_models.hpp"

#include <cmath>
#include <stdexcept>

namespace delaynet {

namespace {
// Substep count for RK4 over one sample period. Sized so that integrating
// the linearized model stays within ~1e-7 of the exact ZOH map for the
// stiffest lateral fixtures.
constexpr int kRk4Substeps = 20;
}  // namespace

Vector step_linear_perturbed(const DiscreteLti& model, const Vector& x, const Vector& u,
                             double rho, const Matrix& dA, const Matrix& dB) {
  if (x.size() != model.n() || u.size() != model.m()) {
    throw std::invalid_argument("step_linear_perturbed: state/input dimensions mismatch");
  }
  return (model.A + dA) * x + (model.B + dB) * u + model.P_r * rho;
}

Vector step_linear_truth(const DiscreteLti& model, const Vector& x, const Vector& u,
                         double rho, const UncertaintyModel& unc, Rng& rng) {
  const auto [dA, dB] = sample_uncertainty(unc, rng);
  return step_linear_perturbed(model, x, u, rho, dA, dB);
}

void NonlinearTruthParams::validate() const {
  lateral.validate();
  if (!(alpha_sat > 0.0)) {
    throw std::invalid_argument("NonlinearTruthParams: alpha_sat must be > 0");
  }
}

Vector nonlinear_truth_rhs(const NonlinearTruthParams& p, const Vector& x, double steer,
                           double rho) {
  if (x.size() != 4) {
    throw std::invalid_argument("nonlinear_truth_rhs: state must be 4-dimensional");
  }
  const LateralParams& lp = p.lateral;
  const double beta = x(0), r = x(1), psi = x(2);

  const double alpha_f = steer - beta - lp.l_f * r / lp.v;
  const double alpha_r = -beta + lp.l_r * r / lp.v;
  const double f_front = lp.c_f * p.alpha_sat * std::atan(alpha_f / p.alpha_sat);
  const double f_rear = lp.c_r * p.alpha_sat * std::atan(alpha_r / p.alpha_sat);

  Vector dx(4);
  dx(0) = (f_front + f_rear) / (lp.m * lp.v) - r;
  dx(1) = (lp.l_f * f_front - lp.l_r * f_rear) / lp.I_z;
  dx(2) = r - lp.v * rho;
  dx(3) = lp.v * beta + lp.l_s * r + lp.v * psi - lp.v * lp.l_s * rho;
  return dx;
}

Vector step_nonlinear_truth(const NonlinearTruthParams& p, const Vector& x, double steer,
                            double rho, double T_c) {
  p.validate();
  if (!(T_c > 0.0)) throw std::invalid_argument("step_nonlinear_truth: T_c must be > 0");

  const double h = T_c / kRk4Substeps;
  Vector state = x;
  for (int i = 0; i < kRk4Substeps; ++i) {
    const Vector k1 = nonlinear_truth_rhs(p, state, steer, rho);
    const Vector k2 = nonlinear_truth_rhs(p, state + 0.5 * h * k1, steer, rho);
    const Vector k3 = nonlinear_truth_rhs(p, state + 0.5 * h * k2, steer, rho);
    const Vector k4 = nonlinear_truth_rhs(p, state + h * k3, steer, rho);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return state;
}

}  // namespace delaynet
