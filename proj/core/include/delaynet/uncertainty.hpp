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

#ifndef DELAYNET_UNCERTAINTY_HPP
#define DELAYNET_UNCERTAINTY_HPP

#include <utility>

#include "delaynet/lateral_model.hpp"
#include "delaynet/rng.hpp"

namespace delaynet {

// Norm-bounded structured uncertainty
//   (dA, dB) = gamma * E * Delta * (H_A, H_B),   ||Delta||_2 <= 1.
// The tilde pair bounds the window-averaged uncertainty seen by the
// prediction error channel; it defaults to (gamma, E).
struct UncertaintyModel {
  double gamma{0.0};
  Matrix E;      // n x r
  Matrix H_A;    // q x n
  Matrix H_B;    // q x m
  double gamma_tilde{0.0};
  Matrix E_tilde;  // n x r_tilde

  int n() const { return static_cast<int>(E.rows()); }
  int r() const { return static_cast<int>(E.cols()); }
  int q() const { return static_cast<int>(H_A.rows()); }

  // gamma = 0, E = I, H_A = I, H_B = 0: no perturbation at all.
  static UncertaintyModel none(int n, int m);

  // E = I, H_A = I, H_B = 0 with the given gamma (and tilde pair equal).
  static UncertaintyModel scaled_identity(int n, int m, double gamma);

  void validate() const;
};

// Draws Delta with spectral norm <= 1 (dense Gaussian matrix normalized by
// its largest singular value, then shrunk by a uniform [0,1] factor) and
// returns (dA, dB). gamma == 0 short-circuits to zeros without consuming
// random draws.
std::pair<Matrix, Matrix> sample_uncertainty(const UncertaintyModel& unc, Rng& rng);

// Deterministic variant for a caller-supplied Delta.
std::pair<Matrix, Matrix> uncertainty_terms(const UncertaintyModel& unc, const Matrix& delta);

}  // namespace delaynet

#endif  // DELAYNET_UNCERTAINTY_HPP
