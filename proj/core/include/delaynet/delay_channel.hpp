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

#ifndef DELAYNET_DELAY_CHANNEL_HPP
#define DELAYNET_DELAY_CHANNEL_HPP

#include <deque>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "delaynet/lateral_model.hpp"
#include "delaynet/rng.hpp"

namespace delaynet {

// Step-count delay bounds for the input (controller -> actuator) and output
// (sensor -> controller) channels. Wall-clock delays are just d * T_c.
struct DelayBounds {
  int h1_in{0};
  int h2_in{0};
  int h1_out{0};
  int h2_out{0};

  int tau() const { return h2_in - h1_in; }

  // 0 <= h1 <= h2 on both sides; throws otherwise.
  void validate() const;
};

// A value delivered with its origin stamp, so the receiver can measure the
// delay it experienced (delivery step minus origin_step).
struct TimestampedMeasurement {
  Vector value;
  long origin_step{0};
};

// Bounded time-varying delay line over timestamped values. Delivery is an
// indexed lookup value(k - d_k), not FIFO, so reordering is implicitly
// allowed. History for steps before 0 is pre-seeded with a fixed value.
// Delays are drawn uniformly on [h1, h2] unless a replay trace is loaded.
class DelayChannel {
 public:
  // preseed is served for any stamp < 0.
  DelayChannel(int h1, int h2, Vector preseed);

  // Stores value with stamp k. Stamps must advance by exactly 1.
  void push(long k, Vector value);

  // Draws d_k (or consumes the next replay element), checks it lies in
  // [h1, h2], and returns the value stamped k - d_k.
  TimestampedMeasurement sample_delayed(long k, Rng& rng);

  // Replaces random draws with a fixed delay sequence. Every element must
  // lie within [h1, h2]; violations are rejected at load time.
  void replay_trace(std::vector<int> d_seq);

  int h1() const { return h1_; }
  int h2() const { return h2_; }

  // Delays actually served so far, in sampling order.
  const std::vector<int>& sampled_delays() const { return sampled_; }

 private:
  const Vector& value_at(long stamp) const;

  int h1_;
  int h2_;
  Vector preseed_;
  std::deque<std::pair<long, Vector>> buffer_;  // capacity h2 + 1
  std::optional<std::vector<int>> trace_;
  std::size_t trace_pos_{0};
  std::vector<int> sampled_;
  long last_push_{-1};
  bool any_push_{false};
};

// Plain-text delay traces, one integer per line, for bit-exact replay.
std::vector<int> load_delay_trace(const std::filesystem::path& path);
void save_delay_trace(const std::filesystem::path& path, std::span<const int> trace);

}  // namespace delaynet

#endif  // DELAYNET_DELAY_CHANNEL_HPP
