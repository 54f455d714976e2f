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

#ifndef DELAYNET_LOGGING_HPP
#define DELAYNET_LOGGING_HPP

#include <string_view>

namespace delaynet {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Threshold read once from DELAYNET_LOG_LEVEL ({error,warn,info,debug}).
// Unset or unrecognized values fall back to warn.
LogLevel log_level();

// Writes "[delaynet] level: message" to stderr when level <= threshold.
void log_message(LogLevel level, std::string_view message);

inline void log_error(std::string_view msg) { log_message(LogLevel::kError, msg); }
inline void log_warn(std::string_view msg) { log_message(LogLevel::kWarn, msg); }
inline void log_info(std::string_view msg) { log_message(LogLevel::kInfo, msg); }
inline void log_debug(std::string_view msg) { log_message(LogLevel::kDebug, msg); }

}  // namespace delaynet

#endif  // DELAYNET_LOGGING_HPP
