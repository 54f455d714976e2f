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

#ifndef DELAYNET_MATRIX_POWER_HPP
#define DELAYNET_MATRIX_POWER_HPP

#include <vector>

#include "delaynet/lateral_model.hpp"

namespace delaynet {

// Signed integer matrix power by repeated squaring; A^0 = I. Negative
// exponents require an invertible A and throw otherwise.
Matrix matrix_power(const Matrix& A, long exponent);

// Precomputed table of A^j for j in [-max_power, max_power]. The delay
// compensation sums touch the same powers thousands of times per run, and
// large negative powers of a stable A grow fast; computing them once keeps
// the cost and the rounding fixed. Construction logs a warning when
// cond(A^max_power) exceeds 1e8.
class PowerTable {
 public:
  PowerTable(const Matrix& A, int max_power);

  const Matrix& power(int j) const;

  int max_power() const { return max_power_; }
  int n() const { return static_cast<int>(powers_[max_power_].rows()); }

  // 2-norm condition number of A^max_power.
  double extreme_condition() const { return extreme_condition_; }

 private:
  int max_power_;
  std::vector<Matrix> powers_;  // powers_[j + max_power_] = A^j
  double extreme_condition_{1.0};
};

}  // namespace delaynet

#endif  // DELAYNET_MATRIX_POWER_HPP
