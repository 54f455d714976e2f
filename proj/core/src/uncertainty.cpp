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

#include "delaynet/uncertainty.hpp"

#include <stdexcept>

namespace delaynet {

UncertaintyModel UncertaintyModel::none(int n, int m) {
  return scaled_identity(n, m, 0.0);
}

UncertaintyModel UncertaintyModel::scaled_identity(int n, int m, double gamma) {
  UncertaintyModel unc;
  unc.gamma = gamma;
  unc.E = Matrix::Identity(n, n);
  unc.H_A = Matrix::Identity(n, n);
  unc.H_B = Matrix::Zero(n, m);
  unc.gamma_tilde = gamma;
  unc.E_tilde = unc.E;
  return unc;
}

void UncertaintyModel::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("UncertaintyModel: gamma < 0");
  if (H_A.cols() != E.rows()) {
    throw std::invalid_argument("UncertaintyModel: H_A column count must equal n");
  }
  if (H_B.rows() != H_A.rows()) {
    throw std::invalid_argument("UncertaintyModel: H_A and H_B row counts differ");
  }
  if (E_tilde.rows() != E.rows()) {
    throw std::invalid_argument("UncertaintyModel: E_tilde row count must equal n");
  }
}

std::pair<Matrix, Matrix> uncertainty_terms(const UncertaintyModel& unc, const Matrix& delta) {
  if (delta.rows() != unc.r() || delta.cols() != unc.q()) {
    throw std::invalid_argument("uncertainty_terms: Delta must be r x q");
  }
  const Matrix scaled = unc.gamma * unc.E * delta;
  return {scaled * unc.H_A, scaled * unc.H_B};
}

std::pair<Matrix, Matrix> sample_uncertainty(const UncertaintyModel& unc, Rng& rng) {
  const int n = unc.n();
  const int m = static_cast<int>(unc.H_B.cols());
  if (unc.gamma == 0.0) {
    return {Matrix::Zero(n, n), Matrix::Zero(n, m)};
  }
  Matrix delta(unc.r(), unc.q());
  for (int i = 0; i < delta.rows(); ++i) {
    for (int j = 0; j < delta.cols(); ++j) delta(i, j) = rng.gaussian();
  }
  const double top = delta.jacobiSvd().singularValues()(0);
  if (top > 0.0) delta /= top;
  delta *= rng.uniform01();
  return uncertainty_terms(unc, delta);
}

}  // namespace delaynet
