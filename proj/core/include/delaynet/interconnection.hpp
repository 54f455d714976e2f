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

#ifndef DELAYNET_INTERCONNECTION_HPP
#define DELAYNET_INTERCONNECTION_HPP

#include <array>
#include <vector>

#include "delaynet/delay_channel.hpp"
#include "delaynet/hinf_norm.hpp"
#include "delaynet/predictor.hpp"
#include "delaynet/uncertainty.hpp"

namespace delaynet {

// Delay-free equivalent of the closed loop: a nominal linear block
//   X+ = A_bar X + B_bar W,  Y = C_bar X + D_bar W
// in feedback with a block-diagonal norm-bounded operator W = Delta(Y).
//
// State blocks   X = [Z, x_prev, u_prev, e]                  (N = 3n + m)
// Input blocks   W = [w_unc, w_d, w_d_acc, w_p, w_1 .. w_7]
// Output blocks  Y = [y_unc, v, v_acc, y_p, v x6, q]
//
// where v = u(k) - u(k-1), q = x(k) - x(k-1), the *_acc pair carries the
// output-delay accumulation of v and w_d, w_p/y_p carry the prediction
// error channel, and w_1..w_7 absorb the delayed difference terms whose
// gains are the scalar norms mu_1..mu_7.
struct InterconnectedSystem {
  Matrix A_bar;
  Matrix B_bar;
  Matrix C_bar;
  Matrix D_bar;

  std::array<double, 7> mu{};  // mu[i] is mu_{i+1}
  Matrix beta1, beta2, beta3;  // n x n delay-window operators
  Matrix upsilon;              // n x m averaged input accumulation

  int d_out{0};  // output delay this instance was built for
  int n{0}, m{0};

  std::vector<int> state_block_sizes;   // [n, n, m, n]
  std::vector<int> input_block_sizes;   // [r, m, n, r~, m, n, n, n, n, n, n]
  std::vector<int> output_block_sizes;  // [q, m, n, n, m x6, n]

  int N() const { return static_cast<int>(A_bar.rows()); }
  int W() const { return static_cast<int>(B_bar.cols()); }
  int Y() const { return static_cast<int>(C_bar.rows()); }
};

// Assembles the interconnection for one output-delay value d_out in
// [h1_out, h2_out]. The scalar gains mu_1..mu_7 are evaluated with
// hinf_norm_poly on the given grid; mu_3..mu_6 use this instance's d_out.
// Requires an invertible A and a square H_A (q = n).
InterconnectedSystem build_interconnected(const DiscreteLti& model,
                                          const UncertaintyModel& unc, const Gains& gains,
                                          const DelayBounds& bounds, int d_out,
                                          int hinf_grid = kDefaultHinfGrid);

// Spectral radii of the two closed-loop blocks: (A + F K) driving the
// transformed state and A - L A^d C A^{-d} driving the observer error.
// A cheap screen to run before any matrix-inequality work.
std::pair<double, double> spectral_margins(const DiscreteLti& model, const Gains& gains,
                                           const DelayBounds& bounds, int d_out);

}  // namespace delaynet

#endif  // DELAYNET_INTERCONNECTION_HPP
