// Copyright 2026 The trapq Authors
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

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "trapq/core.hpp"
#include "trapq/pulses.hpp"

namespace trapq {

inline constexpr int kScheduleFormatVersion = 1;

class ScheduleParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * On-disk schedule:
 *
 *   {"version": 1, "name": "...",
 *    "config": {"n_cyc": 6, "n_ax": 6, "eta": 2.0},
 *    "global_phase": 0.0,
 *    "pulses": [{"kind": "sc", "theta": 2.22..., "phi": 0.0}, ...]}
 *
 * `name` and `global_phase` are optional. Angles are written in the
 * shortest decimal form that reads back to the same double.
 */
struct ScheduleFile {
  int version = kScheduleFormatVersion;
  SpaceConfig cfg;
  double eta = 2.0;
  Schedule schedule;
};

std::string serialize(const ScheduleFile& file);
ScheduleFile parse_schedule(const std::string& text);

ScheduleFile read_schedule(const std::filesystem::path& path);
void write_schedule(const std::filesystem::path& path, const ScheduleFile& file);

}  // namespace trapq
