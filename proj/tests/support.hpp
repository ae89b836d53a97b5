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

#include <string>

#include "nbwalk/graph.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(NBWALK_FIXTURE_DIR) + "/" + name + ".edges";
}

inline nbwalk::Graph fixture(const std::string& name) {
  return nbwalk::read_edge_list(fixture_path(name));
}

}  // namespace testing_support
