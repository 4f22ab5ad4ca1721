// Copyright 2026 The Authors.
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

// Family files: one set per line, elements as signed integers separated by
// single spaces, `{}` for the empty set, `#` comments and blank lines
// ignored. Duplicate sets are an error.

#ifndef SYMPLECTIC_FAMILY_IO_HPP_
#define SYMPLECTIC_FAMILY_IO_HPP_

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symplectic/greedy.hpp"
#include "symplectic/signed_set.hpp"

namespace symplectic {

struct ParsedFamily {
  GroundSize n;
  std::vector<SignedSubset> sets;  // in file order
};

// Without `n`, the ground size is the largest magnitude in the file (at
// least 1).
inline ParsedFamily parse_family(std::string_view text,
                                 std::optional<GroundSize> n = std::nullopt) {
  std::vector<SignedSubset> sets;
  std::unordered_map<SignedSubset, int> first_line;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const SignedSubset s =
        detail::ParseSetLine(line, n ? &*n : nullptr, line_number);
    auto [it, inserted] = first_line.emplace(s, line_number);
    if (!inserted) {
      throw ParseError("duplicate set " + format_braced(s) +
                           " (first seen on line " +
                           std::to_string(it->second) + ")",
                       line_number, 1);
    }
    sets.push_back(s);
  }

  int max_magnitude = 1;
  for (SignedSubset s : sets) max_magnitude = std::max(max_magnitude, s.max_magnitude());
  return ParsedFamily{n.value_or(GroundSize(max_magnitude)), std::move(sets)};
}

inline ParsedFamily read_family_file(const std::string& path,
                                     std::optional<GroundSize> n = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str(), n);
}

// Canonical file text: one line per set, by cardinality then lexicographic.
inline std::string format_family(std::vector<SignedSubset> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  std::string out;
  for (SignedSubset s : sets) {
    out += format_set(s);
    out += '\n';
  }
  return out;
}

inline std::string format_family(const BasisFamily& family) {
  return format_family(
      std::vector<SignedSubset>(family.sets().begin(), family.sets().end()));
}

}  // namespace symplectic

#endif  // SYMPLECTIC_FAMILY_IO_HPP_
