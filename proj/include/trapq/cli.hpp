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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trapq/core.hpp"
#include "trapq/pulses.hpp"

namespace trapq::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct RunConfig {
  SpaceConfig cfg;
  LambDicke eta{2.0};
};

/// "n_cyc=6,n_ax=6,eta=2"; missing keys keep the values in `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

/// "|101>" or "101", spin first.
unsigned parse_label(std::string_view text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapq::cli
