// Copyright 2026 The scs-hierarchy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text dataset format: one string per line, '#' starts a comment
// line, blank lines are ignored, symbols are printable non-whitespace.

#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scs/error.hpp"
#include "scs/strings.hpp"

namespace scs {

/// Parses raw dataset lines. Surrounding whitespace is trimmed; interior
/// whitespace or non-printable bytes are an InputError. The result is not
/// reduced; pass it through reduce_substring_free().
inline std::vector<std::string> parse_dataset(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n\f\v");
    std::string s = line.substr(first, last - first + 1);
    if (s.front() == '#') continue;
    for (unsigned char c : s) {
      if (!std::isgraph(c)) {
        throw InputError("dataset line " + std::to_string(line_no) +
                         ": symbols must be printable non-whitespace characters");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::string> parse_dataset(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

/// Unreduced lines of a dataset file; at least one.
inline std::vector<std::string> read_dataset_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dataset file: " + path);
  auto raw = parse_dataset(in);
  if (raw.empty()) throw InputError("dataset has no strings: " + path);
  return raw;
}

inline InputSet read_dataset_file(const std::string& path) { return reduce_substring_free(read_dataset_lines(path)); }

/// Writes `inputs` in dataset format, each header line prefixed with "# ".
inline void write_dataset(std::ostream& out, const InputSet& inputs,
                          const std::vector<std::string>& header = {}) {
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& s : inputs) out << s << '\n';
}

}  // namespace scs
