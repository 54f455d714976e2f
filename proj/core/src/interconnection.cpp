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

#include "delaynet/interconnection.hpp"

#include <numeric>
#include <stdexcept>

namespace delaynet {

namespace {

std::vector<int> offsets(const std::vector<int>& sizes) {
  std::vector<int> off(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), off.begin() + 1);
  return off;
}

}  // namespace

InterconnectedSystem build_interconnected(const DiscreteLti& model,
                                          const UncertaintyModel& unc, const Gains& gains,
                                          const DelayBounds& bounds, int d_out,
                                          int hinf_grid) {
  bounds.validate();
  unc.validate();
  if (d_out < bounds.h1_out || d_out > bounds.h2_out) {
    throw std::invalid_argument("build_interconnected: d_out outside [h1_out, h2_out]");
  }
  const int n = model.n();
  const int m = model.m();
  if (unc.q() != n) {
    throw std::invalid_argument(
        "build_interconnected: the prediction-error channel needs square H_A (q = n)");
  }
  if (model.p() != n) {
    throw std::invalid_argument("build_interconnected: needs square C (p = n)");
  }
  const int h1 = bounds.h1_in;
  const int h2 = bounds.h2_in;
  const double tau = static_cast<double>(bounds.tau());

  PowerTable powers(model.A, d_out + h2 + 2);
  const Matrix F = averaged_input_matrix(powers, model.B, h1, h2);

  InterconnectedSystem sys;
  sys.d_out = d_out;
  sys.n = n;
  sys.m = m;

  // Averaged accumulation of the input matrix over both delay extremes.
  sys.upsilon = Matrix::Zero(n, m);
  for (int hj : {h1, h2}) {
    for (int i = 0; i <= hj; ++i) sys.upsilon += powers.power(-i - 1) * model.B;
  }
  sys.upsilon *= 0.5;

  // Delay-window operators for the prediction error channel. The d_out
  // choose-one coefficient is just d_out.
  const double c1 = static_cast<double>(d_out);
  sys.beta1 = Matrix::Zero(n, n);
  sys.beta2 = Matrix::Zero(n, n);
  sys.beta3 = Matrix::Zero(n, n);
  if (d_out > 0) {
    sys.beta1 = c1 * powers.power(d_out - 1);
    for (int i = 0; i < d_out; ++i) {
      sys.beta2 += powers.power(d_out - i - 1);
      sys.beta3 += c1 * powers.power(d_out - i - 2);
    }
  }

  // Scalar channel gains mu_1..mu_7.
  std::vector<PolyTerm> t1, t2, t3, t4, t5, t6, t7;
  for (int hj : {h1, h2}) {
    for (int f = 1; f <= hj - 1; ++f) {
      t1.push_back({f, 0.5 * Matrix::Identity(1, 1)});
    }
    for (int i = 0; i <= hj; ++i) {
      for (int f = 1; f <= hj - i - 1; ++f) {
        t2.push_back({f, 0.5 * powers.power(-i - 1) * model.B});
      }
    }
  }
  for (int i = 0; i < d_out; ++i) {
    for (int f = 1; f <= d_out + h1 - i - 1; ++f) {
      t3.push_back({f, powers.power(d_out - i - 1) * unc.H_B});
      t4.push_back({f, powers.power(d_out - i - 2) * unc.H_A * model.B});
    }
    for (int f = 1; f <= d_out + h2 - i - 1; ++f) {
      t5.push_back({f, powers.power(d_out - i - 1) * unc.H_B});
      t6.push_back({f, powers.power(d_out - i - 2) * unc.H_A * model.B});
    }
  }
  for (int f = 0; f <= d_out - 1; ++f) t7.push_back({f, Matrix::Identity(1, 1)});
  sys.mu = {hinf_norm_poly(t1, hinf_grid), hinf_norm_poly(t2, hinf_grid),
            hinf_norm_poly(t3, hinf_grid), hinf_norm_poly(t4, hinf_grid),
            hinf_norm_poly(t5, hinf_grid), hinf_norm_poly(t6, hinf_grid),
            hinf_norm_poly(t7, hinf_grid)};
  const double mu1 = sys.mu[0], mu2 = sys.mu[1], mu3 = sys.mu[2], mu4 = sys.mu[3];
  const double mu5 = sys.mu[4], mu6 = sys.mu[5], mu7 = sys.mu[6];

  const int r = unc.r();
  const int rt = static_cast<int>(unc.E_tilde.cols());
  sys.state_block_sizes = {n, n, m, n};
  sys.input_block_sizes = {r, m, n, rt, m, n, n, n, n, n, n};
  sys.output_block_sizes = {unc.q(), m, n, n, m, m, m, m, m, m, n};
  const auto xo = offsets(sys.state_block_sizes);
  const auto wo = offsets(sys.input_block_sizes);
  const auto yo = offsets(sys.output_block_sizes);
  const int N = xo.back();
  const int W = wo.back();
  const int Y = yo.back();

  const Matrix observer_loop =
      model.A - gains.L * powers.power(d_out) * model.C * powers.power(-d_out);
  const Matrix FK = F * gains.K;

  sys.A_bar = Matrix::Zero(N, N);
  sys.A_bar.block(xo[0], xo[0], n, n) = model.A + FK;
  sys.A_bar.block(xo[0], xo[3], n, n) = -FK;
  sys.A_bar.block(xo[1], xo[0], n, n) = Matrix::Identity(n, n);
  sys.A_bar.block(xo[1], xo[2], n, m) = -sys.upsilon;
  sys.A_bar.block(xo[2], xo[0], m, n) = gains.K;
  sys.A_bar.block(xo[2], xo[3], m, n) = -gains.K;
  sys.A_bar.block(xo[3], xo[3], n, n) = observer_loop;

  sys.B_bar = Matrix::Zero(N, W);
  sys.B_bar.block(xo[0], wo[0], n, r) = unc.gamma * unc.E;
  sys.B_bar.block(xo[0], wo[1], n, m) = 0.5 * tau * model.B;
  sys.B_bar.block(xo[1], wo[5], n, n) = mu2 * Matrix::Identity(n, n);
  sys.B_bar.block(xo[3], wo[0], n, r) = unc.gamma * unc.E;
  sys.B_bar.block(xo[3], wo[1], n, m) = 0.5 * tau * model.B;
  sys.B_bar.block(xo[3], wo[3], n, rt) = gains.L * powers.power(d_out) * model.C *
                                         powers.power(-d_out) * unc.gamma_tilde *
                                         unc.E_tilde;

  // The input/state difference row [K 0 -I -K] feeding v = u(k) - u(k-1).
  Matrix v_row = Matrix::Zero(m, N);
  v_row.block(0, xo[0], m, n) = gains.K;
  v_row.block(0, xo[2], m, m) = -Matrix::Identity(m, m);
  v_row.block(0, xo[3], m, n) = -gains.K;

  sys.C_bar = Matrix::Zero(Y, N);
  sys.C_bar.block(yo[0], xo[0], unc.q(), n) = unc.H_A;
  sys.C_bar.block(yo[0], xo[2], unc.q(), m) = unc.H_B - unc.H_A * sys.upsilon;
  sys.C_bar.block(yo[1], 0, m, N) = v_row;
  sys.C_bar.block(yo[2], xo[0], n, n) = sys.beta2 * model.B * gains.K;
  sys.C_bar.block(yo[2], xo[2], n, m) = -sys.beta2 * model.B;
  sys.C_bar.block(yo[2], xo[3], n, n) = -sys.beta2 * model.B * gains.K;
  sys.C_bar.block(yo[3], xo[1], n, n) = sys.beta1 * unc.H_A;
  sys.C_bar.block(yo[3], xo[2], n, m) = sys.beta2 * unc.H_B + sys.beta3 * unc.H_A * model.B;
  for (int blk = 4; blk <= 9; ++blk) {
    sys.C_bar.block(yo[blk], 0, m, N) = v_row;
  }
  sys.C_bar.block(yo[10], xo[0], n, n) = Matrix::Identity(n, n);
  sys.C_bar.block(yo[10], xo[1], n, n) = -Matrix::Identity(n, n);
  sys.C_bar.block(yo[10], xo[2], n, m) = -sys.upsilon;

  sys.D_bar = Matrix::Zero(Y, W);
  sys.D_bar.block(yo[0], wo[1], unc.q(), m) = 0.5 * tau * unc.H_B;
  sys.D_bar.block(yo[0], wo[4], unc.q(), m) = -mu1 * unc.H_B;
  sys.D_bar.block(yo[0], wo[5], unc.q(), n) = mu2 * unc.H_A;
  sys.D_bar.block(yo[3], wo[2], n, n) = Matrix::Identity(n, n);
  sys.D_bar.block(yo[3], wo[6], n, n) = -0.5 * mu3 * Matrix::Identity(n, n);
  sys.D_bar.block(yo[3], wo[7], n, n) = -0.5 * c1 * mu4 * Matrix::Identity(n, n);
  sys.D_bar.block(yo[3], wo[8], n, n) = -0.5 * mu5 * Matrix::Identity(n, n);
  sys.D_bar.block(yo[3], wo[9], n, n) = -0.5 * c1 * mu6 * Matrix::Identity(n, n);
  sys.D_bar.block(yo[3], wo[10], n, n) = -mu7 * sys.beta1 * unc.H_A;
  sys.D_bar.block(yo[10], wo[5], n, n) = mu2 * Matrix::Identity(n, n);

  return sys;
}

std::pair<double, double> spectral_margins(const DiscreteLti& model, const Gains& gains,
                                           const DelayBounds& bounds, int d_out) {
  PowerTable powers(model.A, std::max(d_out, bounds.h2_in));
  const Matrix F = averaged_input_matrix(powers, model.B, bounds.h1_in, bounds.h2_in);
  const Matrix ctrl = model.A + F * gains.K;
  const Matrix obs =
      model.A - gains.L * powers.power(d_out) * model.C * powers.power(-d_out);
  const auto radius = [](const Matrix& M) {
    return M.eigenvalues().cwiseAbs().maxCoeff();
  };
  return {radius(ctrl), radius(obs)};
}

}  // namespace delaynet
