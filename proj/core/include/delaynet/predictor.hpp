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

#ifndef DELAYNET_PREDICTOR_HPP
#define DELAYNET_PREDICTOR_HPP

#include <span>
#include <vector>

#include "delaynet/delay_channel.hpp"
#include "delaynet/lateral_model.hpp"
#include "delaynet/matrix_power.hpp"

namespace delaynet {

// Controller gain K (u = K zhat) and observer gain L. The derived input
// matrix F = (A^{-h1} + A^{-h2}) B / 2 is recomputed from the model and the
// bounds wherever it is needed, never stored stale.
struct Gains {
  Matrix K;  // m x n
  Matrix L;  // n x p
};

// Ring of past inputs. past(1) is the most recently pushed input u(k-1).
// Depth slots before the first push read as zero.
class InputHistory {
 public:
  InputHistory(int input_dim, int depth);

  void push(const Vector& u);
  const Vector& past(int age) const;  // age >= 1
  int depth() const { return static_cast<int>(ring_.size()); }
  int input_dim() const { return input_dim_; }

 private:
  int input_dim_;
  std::vector<Vector> ring_;
  std::size_t head_{0};
};

// F = (A^{-h1} + A^{-h2}) B / 2: the input matrix of the delay-free
// transformed dynamics when the in-flight delay is only known to live in
// [h1, h2] and is replaced by the average of the two extremes.
Matrix averaged_input_matrix(const PowerTable& powers, const Matrix& B, int h1, int h2);

// Correction for inputs still in flight over a horizon of h steps:
//   (1/2) sum_{i=0}^{h-1} A^{-i-1} B u(k-h+i).
// The transformed state is x(k) plus this term for each delay extreme.
Vector pending_input_correction(const PowerTable& powers, const Matrix& B,
                                const InputHistory& history, int h);

// Input-driven state change accumulated while a measurement aged d_out
// steps, with the unknown per-step input delay replaced by the average of
// its extremes:
//   (1/2) sum_{i=0}^{d-1} A^{d-i-1} B [u(k-d+i-h1) + u(k-d+i-h2)].
Vector input_effect_since_measurement(const PowerTable& powers, const Matrix& B,
                                      const InputHistory& history, int d_out, int h1_in,
                                      int h2_in);

// Exact variant that consumes measured input delays: element age j of
// input_delay_by_age is the delay the actuator applied at step k-j. Used
// only by the comparison predictor that assumes input delays measurable.
Vector input_effect_since_measurement_measured(const PowerTable& powers, const Matrix& B,
                                               const InputHistory& history, int d_out,
                                               std::span<const int> input_delay_by_age);

// Ground-truth transformed state Z(k) = x(k) + both pending-input
// corrections; the quantity the observer estimates.
Vector artstein_transform(const PowerTable& powers, const Matrix& B,
                          const InputHistory& history, const Vector& x, int h1_in,
                          int h2_in);

// How the observer state is seeded from the first measurement.
enum class ObserverInit { kFromMeasurement, kZero };

// Output-delay-compensating observer with state feedback u = K zhat.
// Consumes timestamped measurements only; it never sees the input delay,
// just its configured bounds.
class PredictorObserver {
 public:
  PredictorObserver(DiscreteLti model, Gains gains, DelayBounds bounds,
                    ObserverInit init = ObserverInit::kFromMeasurement);

  // Seeds zhat from a measurement (first call only; later calls are no-ops).
  // Must run before control() is first used so that u(0) = K zhat(0) sees
  // the seeded state. step() also seeds if nobody called this.
  void initialize(const TimestampedMeasurement& meas);

  // Measurement corrected for the input activity that happened while it was
  // in flight; d_out is taken from the measurement timestamp.
  //   ybar = y + C A^{-d} (Phi(h1) + Phi(h2) + Omega(d))
  Vector corrected_output(const TimestampedMeasurement& meas, long k) const;

  // Current feedback command K zhat.
  Vector control() const { return gains_.K * z_hat_; }

  // Advances the observer:
  //   zhat+ = A zhat + F u + L (A^{d} ybar - C zhat)
  // and records u (the full applied command) into the input history.
  // On the first call the observer state is seeded per ObserverInit.
  void step(const TimestampedMeasurement& meas, long k, const Vector& u);

  // State expected when the command issued now reaches the actuator:
  //   2 (A^{-h1} + A^{-h2})^{-1} zhat.
  Vector predict_arrival_state() const;

  const Vector& z_hat() const { return z_hat_; }
  const InputHistory& history() const { return history_; }
  const PowerTable& powers() const { return powers_; }
  const Matrix& input_matrix() const { return F_; }
  const DiscreteLti& model() const { return model_; }

  // Test-harness hook: when enabled, corrected_output() and step() use the
  // supplied measured input delays instead of the bound average.
  void use_measured_input_delays(bool on) { measured_mode_ = on; }
  void set_input_delay_history(std::span<const int> by_age);

 private:
  Vector omega(int d_out) const;

  DiscreteLti model_;
  Gains gains_;
  DelayBounds bounds_;
  PowerTable powers_;
  Matrix F_;
  Matrix arrival_lift_;  // 2 (A^{-h1} + A^{-h2})^{-1}
  Vector z_hat_;
  InputHistory history_;
  ObserverInit init_;
  bool initialized_{false};
  bool measured_mode_{false};
  std::vector<int> input_delay_by_age_;
};

}  // namespace delaynet

#endif  // DELAYNET_PREDICTOR_HPP
