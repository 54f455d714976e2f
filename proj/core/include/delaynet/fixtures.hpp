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

#ifndef DELAYNET_FIXTURES_HPP
#define DELAYNET_FIXTURES_HPP

#include "delaynet/delay_channel.hpp"
#include "delaynet/lateral_model.hpp"
#include "delaynet/predictor.hpp"

namespace delaynet {
namespace fixtures {

// Desk-scale simulation study: A-class hatchback at 5 m/s.
LateralParams sim_vehicle_params();

// Field study: compact SUV at 3.5 m/s (3-state model, slip angle dropped).
LateralParams field_vehicle_params();

// Delay bounds used by the two studies (step counts at T_c = 0.05 s).
DelayBounds sim_delay_bounds();    // input [3,5], output [4,7]
DelayBounds field_delay_bounds();  // input [4,8], output [6,7]

// Published gain sets for the two studies. The 4-state sim pair is kept as
// an algebraic fixture: on this plant its K is destabilizing through the
// averaged input matrix F at the sim delay bounds (spectral radius ~9.6),
// so closed-loop scenarios should use demo_tuned_* instead.
Gains sim_study_gains();          // 4-state K and L
Matrix sim_study_lqr_gain();      // 1 x 4, u = K x
Gains field_study_gains();        // 3-state K and L
Matrix field_study_lqr_gain();    // 1 x 3

// Gains tuned for this library's closed-loop demos on the sim plant:
// K places the transformed-state poles at {0.92, 0.90, 0.50, 0.45};
// L = A - 0.15 I gives observer decay 0.15 with full-state measurement.
Matrix demo_tuned_K();
Matrix demo_tuned_L(const DiscreteLti& model);

}  // namespace fixtures
}  // namespace delaynet

#endif  // DELAYNET_FIXTURES_HPP
