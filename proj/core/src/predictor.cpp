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

#include "delaynet/predictor.hpp"

#include <stdexcept>
#include <string>

namespace delaynet {

InputHistory::InputHistory(int input_dim, int depth) : input_dim_(input_dim) {
  if (input_dim <= 0 || depth <= 0) {
    throw std::invalid_argument("InputHistory: input_dim and depth must be positive");
  }
  ring_.assign(static_cast<std::size_t>(depth), Vector::Zero(input_dim));
}

void InputHistory::push(const Vector& u) {
  if (u.size() != input_dim_) {
    throw std::invalid_argument("InputHistory::push: wrong input dimension");
  }
  head_ = (head_ + ring_.size() - 1) % ring_.size();
  ring_[head_] = u;
}

const Vector& InputHistory::past(int age) const {
  if (age < 1 || age > depth()) {
    throw std::out_of_range("InputHistory: age " + std::to_string(age) +
                            " outside window of depth " + std::to_string(depth()));
  }
  return ring_[(head_ + static_cast<std::size_t>(age) - 1) % ring_.size()];
}

Matrix averaged_input_matrix(const PowerTable& powers, const Matrix& B, int h1, int h2) {
  if (h1 < 0 || h1 > h2) {
    throw std::invalid_argument("averaged_input_matrix: need 0 <= h1 <= h2");
  }
  return (powers.power(-h1) + powers.power(-h2)) * B / 2.0;
}

Vector pending_input_correction(const PowerTable& powers, const Matrix& B,
                                const InputHistory& history, int h) {
  if (h < 0) throw std::invalid_argument("pending_input_correction: h must be >= 0");
  if (h > history.depth()) {
    throw std::out_of_range("pending_input_correction: history shallower than horizon");
  }
  Vector out = Vector::Zero(powers.n());
  for (int age = 1; age <= h; ++age) {
    out += powers.power(age - h - 1) * (B * history.past(age));
  }
  return 0.5 * out;
}

Vector input_effect_since_measurement(const PowerTable& powers, const Matrix& B,
                                      const InputHistory& history, int d_out, int h1_in,
                                      int h2_in) {
  if (d_out < 0) {
    throw std::invalid_argument("input_effect_since_measurement: d_out must be >= 0");
  }
  if (d_out + h2_in > history.depth()) {
    throw std::out_of_range("input_effect_since_measurement: history too shallow");
  }
  Vector out = Vector::Zero(powers.n());
  for (int i = 0; i < d_out; ++i) {
    const Matrix& weight = powers.power(d_out - i - 1);
    out += weight * (B * (history.past(d_out - i + h1_in) + history.past(d_out - i + h2_in)));
  }
  return 0.5 * out;
}

Vector input_effect_since_measurement_measured(const PowerTable& powers, const Matrix& B,
                                               const InputHistory& history, int d_out,
                                               std::span<const int> input_delay_by_age) {
  if (d_out < 0) {
    throw std::invalid_argument("input_effect_since_measurement_measured: d_out >= 0");
  }
  if (static_cast<int>(input_delay_by_age.size()) < d_out) {
    throw std::out_of_range(
        "input_effect_since_measurement_measured: missing measured delays");
  }
  Vector out = Vector::Zero(powers.n());
  for (int i = 0; i < d_out; ++i) {
    const int age = d_out - i;  // input step k - age
    const int applied_age = age + input_delay_by_age[age - 1];
    out += powers.power(d_out - i - 1) * (B * history.past(applied_age));
  }
  return out;
}

Vector artstein_transform(const PowerTable& powers, const Matrix& B,
                          const InputHistory& history, const Vector& x, int h1_in,
                          int h2_in) {
  return x + pending_input_correction(powers, B, history, h1_in) +
         pending_input_correction(powers, B, history, h2_in);
}

PredictorObserver::PredictorObserver(DiscreteLti model, Gains gains, DelayBounds bounds,
                                     ObserverInit init)
    : model_(std::move(model)),
      gains_(std::move(gains)),
      bounds_(bounds),
      powers_(model_.A, bounds.h2_out + bounds.h2_in),
      F_(averaged_input_matrix(powers_, model_.B, bounds.h1_in, bounds.h2_in)),
      z_hat_(Vector::Zero(model_.n())),
      history_(model_.m(), bounds.h2_out + bounds.h2_in + 2),
      init_(init) {
  bounds_.validate();
  if (model_.p() != model_.n()) {
    throw std::invalid_argument(
        "PredictorObserver: the delay lift A^d y needs a square C (p = n)");
  }
  if (gains_.K.rows() != model_.m() || gains_.K.cols() != model_.n()) {
    throw std::invalid_argument("PredictorObserver: K must be m x n");
  }
  if (gains_.L.rows() != model_.n() || gains_.L.cols() != model_.p()) {
    throw std::invalid_argument("PredictorObserver: L must be n x p");
  }
  const Matrix combo = powers_.power(-bounds_.h1_in) + powers_.power(-bounds_.h2_in);
  Eigen::FullPivLU<Matrix> lu(combo);
  if (!lu.isInvertible()) {
    throw std::runtime_error(
        "PredictorObserver: A^{-h1} + A^{-h2} is singular; no arrival prediction");
  }
  arrival_lift_ = 2.0 * lu.inverse();
}

Vector PredictorObserver::omega(int d_out) const {
  if (measured_mode_) {
    return input_effect_since_measurement_measured(powers_, model_.B, history_, d_out,
                                                   input_delay_by_age_);
  }
  return input_effect_since_measurement(powers_, model_.B, history_, d_out, bounds_.h1_in,
                                        bounds_.h2_in);
}

Vector PredictorObserver::corrected_output(const TimestampedMeasurement& meas,
                                           long k) const {
  const long age = k - meas.origin_step;
  if (age < bounds_.h1_out || age > bounds_.h2_out) {
    throw std::out_of_range("PredictorObserver: measured output delay " +
                            std::to_string(age) + " outside configured bounds [" +
                            std::to_string(bounds_.h1_out) + ", " +
                            std::to_string(bounds_.h2_out) + "]");
  }
  const int d_out = static_cast<int>(age);
  const Vector correction =
      pending_input_correction(powers_, model_.B, history_, bounds_.h1_in) +
      pending_input_correction(powers_, model_.B, history_, bounds_.h2_in) + omega(d_out);
  return meas.value + model_.C * (powers_.power(-d_out) * correction);
}

void PredictorObserver::initialize(const TimestampedMeasurement& meas) {
  if (initialized_) return;
  if (init_ == ObserverInit::kFromMeasurement) {
    // Lift the first measurement through C (plain solve; C is square).
    z_hat_ = model_.C.fullPivLu().solve(meas.value);
  }
  initialized_ = true;
}

void PredictorObserver::step(const TimestampedMeasurement& meas, long k, const Vector& u) {
  initialize(meas);
  const int d_out = static_cast<int>(k - meas.origin_step);
  const Vector ybar = corrected_output(meas, k);
  const Vector innovation = powers_.power(d_out) * ybar - model_.C * z_hat_;
  z_hat_ = model_.A * z_hat_ + F_ * u + gains_.L * innovation;
  history_.push(u);
}

Vector PredictorObserver::predict_arrival_state() const { return arrival_lift_ * z_hat_; }

void PredictorObserver::set_input_delay_history(std::span<const int> by_age) {
  input_delay_by_age_.assign(by_age.begin(), by_age.end());
}

}  // namespace delaynet
