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

#include "delaynet/stability.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace delaynet {

namespace {

// Assembles the certificate matrix; exactly symmetric by construction.
Matrix assemble(const InterconnectedSystem& sys, const Matrix& P, double beta) {
  const int N = sys.N();
  const int W = sys.W();
  const int Y = sys.Y();
  const int size = 2 * N + W + Y;

  const Matrix PA = P * sys.A_bar;
  const Matrix PB = P * sys.B_bar;

  Matrix M = Matrix::Zero(size, size);
  M.block(0, 0, N, N) = -beta * beta * P;
  M.block(N, N, W, W) = -Matrix::Identity(W, W);
  M.block(N + W, N + W, N, N) = -P;
  M.block(2 * N + W, 2 * N + W, Y, Y) = -Matrix::Identity(Y, Y);

  M.block(0, N + W, N, N) = PA.transpose();
  M.block(N + W, 0, N, N) = PA;
  M.block(0, 2 * N + W, N, Y) = sys.C_bar.transpose();
  M.block(2 * N + W, 0, Y, N) = sys.C_bar;
  M.block(N, N + W, W, N) = PB.transpose();
  M.block(N + W, N, N, W) = PB;
  M.block(N, 2 * N + W, W, Y) = sys.D_bar.transpose();
  M.block(2 * N + W, N, Y, W) = sys.D_bar;
  return M;
}

struct MarginResult {
  double value;
  Vector eigvec;
};

MarginResult margin_with_vector(const InterconnectedSystem& sys, const Matrix& P,
                                double beta) {
  const Matrix M = assemble(sys, P, beta);
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  const auto& vals = es.eigenvalues();
  const int top = static_cast<int>(vals.size()) - 1;
  return {vals(top), es.eigenvectors().col(top)};
}

void require_symmetric(const Matrix& P) {
  if (P.rows() != P.cols()) throw std::invalid_argument("P must be square");
  const double scale = std::max(1.0, P.cwiseAbs().maxCoeff());
  if ((P - P.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("P must be symmetric");
  }
}

}  // namespace

double check_mi(const InterconnectedSystem& sys, const Matrix& P, double beta) {
  require_symmetric(P);
  if (P.rows() != sys.N()) {
    throw std::invalid_argument("check_mi: P dimension does not match the instance");
  }
  return margin_with_vector(sys, P, beta).value;
}

StabilityCertificate search_feasible_P(std::span<const InterconnectedSystem> instances,
                                       double beta, const SearchOptions& opts) {
  if (instances.empty()) {
    throw std::invalid_argument("search_feasible_P: no instances");
  }
  const int N = instances[0].N();
  for (const auto& sys : instances) {
    if (sys.N() != N) {
      throw std::invalid_argument("search_feasible_P: instances disagree on dimension");
    }
  }

  Matrix P = Matrix::Identity(N, N);
  StabilityCertificate best;
  best.beta = beta;
  best.margin = std::numeric_limits<double>::infinity();
  for (const auto& sys : instances) best.d_out_set.push_back(sys.d_out);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    // Worst instance at the current P.
    double worst = -std::numeric_limits<double>::infinity();
    int worst_idx = 0;
    Vector worst_vec;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const MarginResult r = margin_with_vector(instances[i], P, beta);
      if (r.value > worst) {
        worst = r.value;
        worst_idx = static_cast<int>(i);
        worst_vec = r.eigvec;
      }
    }

    if (worst < best.margin) {
      best.margin = worst;
      best.P = P;
      best.iterations = iter + 1;
    }
    if (worst < opts.target_margin) break;

    // Subgradient of the top eigenvalue w.r.t. P through the blocks where P
    // appears: -beta^2 x1 x1' - x3 x3' + sym(x3 (A x1 + B x2)').
    const auto& sys = instances[worst_idx];
    const int W = sys.W();
    const Vector x1 = worst_vec.segment(0, N);
    const Vector x2 = worst_vec.segment(N, W);
    const Vector x3 = worst_vec.segment(N + W, N);
    const Vector flow = sys.A_bar * x1 + sys.B_bar * x2;
    Matrix grad = -beta * beta * (x1 * x1.transpose()) - x3 * x3.transpose();
    grad += x3 * flow.transpose() + flow * x3.transpose();

    const double grad_norm = grad.norm();
    if (grad_norm < 1e-15) break;
    const double step = opts.step_scale / ((1.0 + iter) * 0.05 + std::sqrt(1.0 + iter));
    P -= (step / grad_norm) * grad;

    // Project back to the symmetric cone P >= floor * I.
    P = ((P + P.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(P);
    Vector clipped = es.eigenvalues().cwiseMax(opts.eigenvalue_floor);
    P = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
    P = ((P + P.transpose()) / 2.0).eval();
  }

  if (best.P.size() == 0) best.P = P;
  best.feasible = best.margin < 0.0;
  return best;
}

void write_certificate(const std::filesystem::path& path,
                       const StabilityCertificate& cert) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_certificate: cannot open " + path.string());
  }
  char buf[64];
  out << "feasible: " << (cert.feasible ? "true" : "false") << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", cert.beta);
  out << "beta: " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", cert.margin);
  out << "margin: " << buf << "\n";
  out << "iterations: " << cert.iterations << "\n";
  out << "d_out_set:";
  for (int d : cert.d_out_set) out << ' ' << d;
  out << "\n";
  out << "P: " << cert.P.rows() << " x " << cert.P.cols() << "\n";
  for (long i = 0; i < cert.P.rows(); ++i) {
    for (long j = 0; j < cert.P.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", cert.P(i, j));
      out << buf << (j + 1 < cert.P.cols() ? " " : "");
    }
    out << "\n";
  }
}

}  // namespace delaynet
