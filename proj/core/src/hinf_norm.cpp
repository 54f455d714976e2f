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

#include "delaynet/hinf_norm.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace delaynet {

double hinf_norm_poly(std::span<const PolyTerm> terms, int grid_points) {
  if (terms.empty()) return 0.0;
  if (grid_points < 1) throw std::invalid_argument("hinf_norm_poly: grid_points < 1");

  const long rows = terms[0].coeff.rows();
  const long cols = terms[0].coeff.cols();
  for (const PolyTerm& t : terms) {
    if (t.coeff.rows() != rows || t.coeff.cols() != cols) {
      throw std::invalid_argument("hinf_norm_poly: coefficient shapes differ");
    }
  }

  using ComplexMatrix = Eigen::MatrixXcd;
  double best = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid_points;
    ComplexMatrix H = ComplexMatrix::Zero(rows, cols);
    for (const PolyTerm& t : terms) {
      const std::complex<double> phase =
          std::polar(1.0, -theta * static_cast<double>(t.delay));
      H += t.coeff.cast<std::complex<double>>() * phase;
    }
    const double sigma = H.jacobiSvd().singularValues()(0);
    if (sigma > best) best = sigma;
  }
  return best;
}

}  // namespace delaynet
