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

#include "delaynet/delay_channel.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace delaynet {

void DelayBounds::validate() const {
  if (h1_in < 0 || h1_out < 0 || h1_in > h2_in || h1_out > h2_out) {
    throw std::invalid_argument("DelayBounds: need 0 <= h1 <= h2 on both channels");
  }
}

DelayChannel::DelayChannel(int h1, int h2, Vector preseed)
    : h1_(h1), h2_(h2), preseed_(std::move(preseed)) {
  if (h1 < 0 || h1 > h2) {
    throw std::invalid_argument("DelayChannel: need 0 <= h1 <= h2");
  }
}

void DelayChannel::push(long k, Vector value) {
  if (any_push_ && k != last_push_ + 1) {
    throw std::invalid_argument("DelayChannel::push: stamps must advance by exactly 1");
  }
  if (!any_push_ && k < 0) {
    throw std::invalid_argument("DelayChannel::push: stamps start at k >= 0");
  }
  buffer_.emplace_back(k, std::move(value));
  while (buffer_.size() > static_cast<std::size_t>(h2_) + 1) buffer_.pop_front();
  last_push_ = k;
  any_push_ = true;
}

const Vector& DelayChannel::value_at(long stamp) const {
  if (stamp < 0) return preseed_;
  for (const auto& [s, v] : buffer_) {
    if (s == stamp) return v;
  }
  throw std::out_of_range("DelayChannel: stamp " + std::to_string(stamp) +
                          " is outside the buffered history");
}

TimestampedMeasurement DelayChannel::sample_delayed(long k, Rng& rng) {
  int d;
  if (trace_) {
    if (trace_pos_ >= trace_->size()) {
      throw std::runtime_error("DelayChannel: replay trace exhausted");
    }
    d = (*trace_)[trace_pos_++];
  } else {
    d = rng.uniform_int(h1_, h2_);
  }
  if (d < h1_ || d > h2_) {
    throw std::logic_error("DelayChannel: sampled delay escaped its bounds");
  }
  const long stamp = k - d;
  TimestampedMeasurement out{value_at(stamp), stamp};
  sampled_.push_back(d);
  return out;
}

void DelayChannel::replay_trace(std::vector<int> d_seq) {
  for (int d : d_seq) {
    if (d < h1_ || d > h2_) {
      throw std::invalid_argument("DelayChannel::replay_trace: element " +
                                  std::to_string(d) + " outside [" + std::to_string(h1_) +
                                  ", " + std::to_string(h2_) + "]");
    }
  }
  trace_ = std::move(d_seq);
  trace_pos_ = 0;
}

std::vector<int> load_delay_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_delay_trace: cannot open " + path.string());
  }
  std::vector<int> trace;
  long value;
  while (in >> value) trace.push_back(static_cast<int>(value));
  if (!in.eof()) {
    throw std::runtime_error("load_delay_trace: non-integer content in " + path.string());
  }
  return trace;
}

void save_delay_trace(const std::filesystem::path& path, std::span<const int> trace) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_delay_trace: cannot open " + path.string());
  }
  for (int d : trace) out << d << "\n";
}

}  // namespace delaynet
