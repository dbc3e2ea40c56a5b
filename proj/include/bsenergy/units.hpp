/*
 * Copyright 2026 The bsenergy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace bsenergy {

inline constexpr double kJoulePerWattHour = 3600.0;

/// Energy stored in joules; watt-hours are derived on demand.
struct Energy {
  double joule = 0.0;

  constexpr double watt_hour() const { return joule / kJoulePerWattHour; }

  static constexpr Energy from_watt_hour(double wh) {
    return Energy{wh * kJoulePerWattHour};
  }

  friend constexpr bool operator==(const Energy&, const Energy&) = default;
};

/// Raised when a requested operating point cannot be realized by the model
/// (e.g. demultiplexer capacity exceeded).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace detail

}  // namespace bsenergy
