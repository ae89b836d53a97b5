// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nbwalk/edge_space.hpp"

namespace nbwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

struct Hooks {
  // Applied to the weighted operator set built by ihara-check before the
  // weighted determinant identity is evaluated.
  std::function<void(EdgeOperatorSet&)> mutate_operators;
};

// args[0] is the program name. CSV goes to --out when given, otherwise to
// `out`; human-readable summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace nbwalk::cli
