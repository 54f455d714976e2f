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

#ifndef DELAYNET_HINF_NORM_HPP
#define DELAYNET_HINF_NORM_HPP

#include <span>
#include <vector>

#include "delaynet/lateral_model.hpp"

namespace delaynet {

// One term coeff * z^{-delay} of a finite matrix polynomial in z^{-1}.
struct PolyTerm {
  int delay{0};
  Matrix coeff;
};

inline constexpr int kDefaultHinfGrid = 1024;

// sup over the unit circle of the largest singular value of
// sum_j coeff_j e^{-i theta delay_j}, evaluated on a uniform grid of
// grid_points angles (theta = 0 included) and returning the grid maximum.
// Doubling grid_points nests the grid, so the value never decreases under
// doubling. An empty term list gives 0.
double hinf_norm_poly(std::span<const PolyTerm> terms, int grid_points = kDefaultHinfGrid);

}  // namespace delaynet

#endif  // DELAYNET_HINF_NORM_HPP
