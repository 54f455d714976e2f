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

#ifndef DELAYNET_DISCRETIZE_HPP
#define DELAYNET_DISCRETIZE_HPP

#include "delaynet/lateral_model.hpp"

namespace delaynet {

// Matrix exponential by scaling-and-squaring with a diagonal Pade(6)
// approximant. Throws std::runtime_error if the result is not finite.
Matrix matrix_exp(const Matrix& M);

// Zero-order-hold discretization at sample time T_c:
//   A = exp(A_c T_c), [B P_r] = (integral_0^T exp(A_c s) ds) [B_c P_rc],
// computed in one augmented matrix exponential. The output C is taken as
// given. Throws if T_c <= 0 or if the discrete A comes out singular.
DiscreteLti discretize_zoh(const ContinuousLti& c, const Matrix& C, double T_c);

// Convenience overload with C = I.
DiscreteLti discretize_zoh(const ContinuousLti& c, double T_c);

}  // namespace delaynet

#endif  // DELAYNET_DISCRETIZE_HPP
