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

#ifndef DELAYNET_DLQR_HPP
#define DELAYNET_DLQR_HPP

#include "delaynet/lateral_model.hpp"

namespace delaynet {

// Infinite-horizon discrete LQR by fixed-point iteration of the Riccati
// recursion to 1e-12 residual. The returned gain follows the u = K x sign
// convention used everywhere in this library (K = -K_classic), so a
// stabilizing result satisfies rho(A + B K) < 1.
// Throws std::runtime_error after 1e5 iterations without convergence.
Matrix dlqr(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& R);

}  // namespace delaynet

#endif  // DELAYNET_DLQR_HPP
