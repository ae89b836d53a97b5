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

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nbwalk::csv {

// Locale-independent shortest-of-%g style rendering with 12 significant
// digits. Negative zero prints as "0"; non-finite values print as "inf",
// "-inf" or "nan".
std::string format_real(double value);
std::string format_integer(std::int64_t value);
std::string format_bool(bool value);

// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

class Table {
 public:
  explicit Table(std::vector<std::string> header);

  // Throws DimensionMismatch when the row width differs from the header.
  void add_row(std::vector<std::string> cells);

  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  [[nodiscard]] std::string str() const;
  void write(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace nbwalk::csv
