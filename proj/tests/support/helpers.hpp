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

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "reference.hpp"
#include "scs/scs.hpp"

namespace scs_test {

inline scs::InputSet set_of(std::initializer_list<std::string> strings) {
  return scs::InputSet(std::vector<std::string>(strings));
}

inline scs::InputSet fig3() { return set_of({"aaa", "cae", "aec", "eee"}); }
inline scs::InputSet fig5() { return set_of({"ae", "aa", "ca"}); }

/// Substring-free random instance with at least `min_n` strings.
inline scs::InputSet random_inputs(scs::SplitMix64& rng, std::size_t max_n, std::size_t max_len, std::size_t alphabet,
                                   std::size_t min_n = 2) {
  for (;;) {
    std::vector<std::string> raw;
    const auto n = rng.between(min_n, max_n);
    for (std::uint64_t i = 0; i < n; ++i) raw.push_back(scs::random_string(rng, rng.between(1, max_len), alphabet));
    auto set = scs::reduce_substring_free(raw);
    if (set.size() >= min_n) return set;
  }
}

inline std::vector<scs_ref::Edge> edges_of(const scs::HierarchicalGraph& hg, const scs::ArcMultiset& d) {
  std::vector<scs_ref::Edge> out;
  for (scs::VertexId v = 1; v < hg.vertex_count(); ++v) {
    const auto& s = hg.label(v);
    if (d.up(v)) out.push_back({s.substr(0, s.size() - 1), s, d.up(v)});
    if (d.down(v)) out.push_back({s, s.substr(1), d.down(v)});
  }
  return out;
}

}  // namespace scs_test
