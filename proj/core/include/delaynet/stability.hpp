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

#ifndef DELAYNET_STABILITY_HPP
#define DELAYNET_STABILITY_HPP

#include <filesystem>
#include <span>
#include <vector>

#include "delaynet/interconnection.hpp"

namespace delaynet {

// Largest eigenvalue of the block matrix
//   [ -beta^2 P   0    A'P   C' ]
//   [     *      -I    B'P   D' ]
//   [     *       *    -P    0  ]
//   [     *       *     *   -I  ]
// Negative margin means (P, beta) certifies contractive decay for this
// instance. P must be symmetric (rejected otherwise); it is not required
// to be positive definite here, only in a certificate.
double check_mi(const InterconnectedSystem& sys, const Matrix& P, double beta);

// Outcome of a common-P search across one instance per output delay.
struct StabilityCertificate {
  bool feasible{false};
  Matrix P;
  double beta{1.0};
  double margin{0.0};         // worst-case largest eigenvalue at P
  std::vector<int> d_out_set;
  int iterations{0};
};

struct SearchOptions {
  int max_iterations{5000};
  double eigenvalue_floor{1e-6};  // projection P >= floor * I
  double target_margin{-1e-9};    // stop as soon as the worst margin is below
  double step_scale{1.0};
};

// Projected subgradient descent on the worst-case largest eigenvalue over
// the instance set, seeking one symmetric P >= floor*I that certifies every
// instance at the given beta. Returns the best P found either way; feasible
// is set only when margin < 0.
StabilityCertificate search_feasible_P(std::span<const InterconnectedSystem> instances,
                                       double beta, const SearchOptions& opts = {});

// Structured-text serialization for regression snapshots.
void write_certificate(const std::filesystem::path& path, const StabilityCertificate& cert);

}  // namespace delaynet

#endif  // DELAYNET_STABILITY_HPP
