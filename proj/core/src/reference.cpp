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

#include "delaynet/reference.hpp"

#include <stdexcept>

namespace delaynet {

namespace {

// Quintic smoothstep profile on sigma in [0,1]: zero value/slope/curvature
// at both ends, unit total rise.
double profile(double sigma) {
  return sigma * sigma * sigma * (10.0 + sigma * (-15.0 + 6.0 * sigma));
}

double profile_slope(double sigma) {
  return sigma * sigma * (30.0 + sigma * (-60.0 + 30.0 * sigma));
}

}  // namespace

ReferenceTrajectory gen_lane_change(double shift_m, double length_m, double speed,
                                    double T_c, long horizon, double start_offset_m) {
  if (!(shift_m > 0.0) || !(length_m > 0.0) || !(speed > 0.0) || !(T_c > 0.0)) {
    throw std::invalid_argument("gen_lane_change: shift, length, speed, T_c must be > 0");
  }
  if (horizon < 0) throw std::invalid_argument("gen_lane_change: horizon must be >= 0");

  ReferenceTrajectory ref;
  ref.shift_m = shift_m;
  ref.length_m = length_m;
  ref.start_offset_m = start_offset_m;
  ref.curvature.resize(static_cast<std::size_t>(horizon), 0.0);
  ref.heading.resize(static_cast<std::size_t>(horizon), 0.0);
  ref.lateral.resize(static_cast<std::size_t>(horizon), 0.0);

  const double ds = speed * T_c;
  const auto slope_at = [&](double s) {
    if (s <= 0.0 || s >= length_m) return 0.0;
    return shift_m / length_m * profile_slope(s / length_m);
  };
  const auto lateral_at = [&](double s) {
    if (s <= 0.0) return 0.0;
    if (s >= length_m) return shift_m;
    return shift_m * profile(s / length_m);
  };

  double heading = 0.0;
  for (long k = 0; k < horizon; ++k) {
    const double s = static_cast<double>(k) * ds - start_offset_m;
    // Step-averaged second derivative: the discrete heading increments
    // v * rho * T_c then telescope through the slope profile exactly.
    const double rho = (slope_at(s + ds) - slope_at(s)) / ds;
    ref.curvature[static_cast<std::size_t>(k)] = rho;
    heading += speed * rho * T_c;
    ref.heading[static_cast<std::size_t>(k)] = heading;
    ref.lateral[static_cast<std::size_t>(k)] = lateral_at(s);
  }
  return ref;
}

ReferenceTrajectory zero_reference(long horizon) {
  ReferenceTrajectory ref;
  ref.curvature.assign(static_cast<std::size_t>(horizon), 0.0);
  ref.heading.assign(static_cast<std::size_t>(horizon), 0.0);
  ref.lateral.assign(static_cast<std::size_t>(horizon), 0.0);
  return ref;
}

}  // namespace delaynet
