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

#ifndef DELAYNET_REFERENCE_HPP
#define DELAYNET_REFERENCE_HPP

#include <vector>

namespace delaynet {

// Per-step curvature profile of a reference path, plus the integrated
// heading and lateral position for plotting. The plant consumes only the
// curvature; the pose columns are bookkeeping.
struct ReferenceTrajectory {
  std::vector<double> curvature;      // rho(k), 1/m
  std::vector<double> heading;        // integral of v * rho
  std::vector<double> lateral;        // analytic lateral profile y(s_k)
  double shift_m{0.0};
  double length_m{0.0};
  double start_offset_m{0.0};

  double rho(long k) const {
    if (k < 0 || k >= static_cast<long>(curvature.size())) return 0.0;
    return curvature[static_cast<std::size_t>(k)];
  }
};

// Single lane change: a C^2 quintic lateral-shift profile in arc length,
// flat before and after the maneuver. The per-step curvature is the exact
// average of the profile's second derivative over each step (slope
// difference / step length), so the discrete heading sum telescopes to
// exactly zero over a completed maneuver.
ReferenceTrajectory gen_lane_change(double shift_m, double length_m, double speed,
                                    double T_c, long horizon,
                                    double start_offset_m = 10.0);

// All-zero curvature (pure regulation scenarios).
ReferenceTrajectory zero_reference(long horizon);

}  // namespace delaynet

#endif  // DELAYNET_REFERENCE_HPP
