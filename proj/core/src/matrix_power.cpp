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

#include "delaynet/matrix_power.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "delaynet/logging.hpp"

namespace delaynet {

Matrix matrix_power(const Matrix& A, long exponent) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("matrix_power: matrix must be square");
  }
  const int n = static_cast<int>(A.rows());
  Matrix base;
  unsigned long e;
  if (exponent >= 0) {
    base = A;
    e = static_cast<unsigned long>(exponent);
  } else {
    Eigen::FullPivLU<Matrix> lu(A);
    if (!lu.isInvertible()) {
      throw std::invalid_argument("matrix_power: negative power of a singular matrix");
    }
    base = lu.inverse();
    e = static_cast<unsigned long>(-exponent);
  }
  Matrix result = Matrix::Identity(n, n);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

PowerTable::PowerTable(const Matrix& A, int max_power) : max_power_(max_power) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("PowerTable: matrix must be square");
  }
  if (max_power < 0) throw std::invalid_argument("PowerTable: max_power must be >= 0");

  Eigen::FullPivLU<Matrix> lu(A);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("PowerTable: matrix is singular");
  }
  const Matrix A_inv = lu.inverse();
  const int n = static_cast<int>(A.rows());

  powers_.assign(2 * max_power + 1, Matrix());
  powers_[max_power] = Matrix::Identity(n, n);
  for (int j = 1; j <= max_power; ++j) {
    powers_[max_power + j] = powers_[max_power + j - 1] * A;
    powers_[max_power - j] = powers_[max_power - j + 1] * A_inv;
  }

  const auto sv = powers_[2 * max_power].jacobiSvd().singularValues();
  const double smin = sv(sv.size() - 1);
  extreme_condition_ = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  if (extreme_condition_ > 1e8) {
    log_warn("PowerTable: cond(A^" + std::to_string(max_power) + ") = " +
             std::to_string(extreme_condition_) +
             " exceeds 1e8; deep delay horizons will lose precision");
  }
}

const Matrix& PowerTable::power(int j) const {
  if (j < -max_power_ || j > max_power_) {
    throw std::out_of_range("PowerTable: exponent " + std::to_string(j) +
                            " outside precomputed range [-" + std::to_string(max_power_) +
                            ", " + std::to_string(max_power_) + "]");
  }
  return powers_[j + max_power_];
}

}  // namespace delaynet
