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

// Exact reference computations for small or special instances.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "scs/error.hpp"
#include "scs/strings.hpp"

namespace scs {

struct BruteOptions {
  std::size_t max_n = 9;
  /// Branch-and-bound on partial lengths. Never changes the result; can be
  /// switched off for audit runs.
  bool prune = true;
};

struct BruteResult {
  std::size_t length = 0;
  /// First optimal permutation in lexicographic order of index sequences.
  Permutation order;
};

/// Shortest superstring length over all n! permutations.
inline BruteResult brute_optimal(const InputSet& inputs, const BruteOptions& options = {}) {
  const std::size_t n = inputs.size();
  if (n > options.max_n) {
    throw LimitError("brute_optimal: " + std::to_string(n) + " strings exceed the limit of " +
                     std::to_string(options.max_n));
  }
  std::vector<std::vector<std::size_t>> ov(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) ov[i][j] = overlap_length(inputs[i], inputs[j]);
    }
  }
  // Each string contributes at least its length minus its best incoming
  // overlap once it is not first.
  std::vector<std::size_t> floor_cost(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t best_in = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) best_in = std::max(best_in, ov[i][j]);
    }
    floor_cost[j] = inputs[j].size() - best_in;
  }

  BruteResult best;
  best.length = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);
  std::size_t remaining_floor = std::accumulate(floor_cost.begin(), floor_cost.end(), std::size_t{0});

  auto dfs = [&](auto&& self, std::size_t partial) -> void {
    if (current.size() == n) {
      if (partial < best.length) {
        best.length = partial;
        best.order = Permutation(current);
      }
      return;
    }
    for (std::size_t next = 0; next < n; ++next) {
      if (used[next]) continue;
      const std::size_t cost =
          current.empty() ? inputs[next].size() : inputs[next].size() - ov[current.back()][next];
      const std::size_t extended = partial + cost;
      remaining_floor -= floor_cost[next];
      if (!options.prune || extended + remaining_floor < best.length) {
        used[next] = true;
        current.push_back(next);
        self(self, extended);
        current.pop_back();
        used[next] = false;
      }
      remaining_floor += floor_cost[next];
    }
  };
  dfs(dfs, 0);
  return best;
}

/// Minimum over all bijections σ of Σ (|s_i| - |overlap(s_i, s_σ(i))|), where
/// a fixed point uses the longest proper self-overlap. Each cycle of σ is a
/// cyclic string through its inputs.
inline std::size_t brute_optimal_cycle_cover(const InputSet& inputs, std::size_t max_n = 8) {
  const std::size_t n = inputs.size();
  if (n > max_n) {
    throw LimitError("brute_optimal_cycle_cover: " + std::to_string(n) +
                     " strings exceed the limit of " + std::to_string(max_n));
  }
  std::vector<std::vector<std::size_t>> cost(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i][j] = inputs[i].size() -
                   (i == j ? self_overlap_length(inputs[i]) : overlap_length(inputs[i], inputs[j]));
    }
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i][sigma[i]];
    best = std::min(best, total);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

/// Closed-form optimum for inputs of length at most 2: every length-1 input
/// adds 1; every length-2 input "ab" is an arc a→b of a symbol digraph
/// (self-loops included) and the optimum is n plus, per weakly connected
/// component, max(1, Σ|indeg - outdeg| / 2).
inline std::size_t two_scs_formula(const InputSet& inputs) {
  std::map<char, std::size_t> symbol;
  for (const auto& s : inputs) {
    if (s.size() > 2) throw PreconditionError("two_scs_formula: input longer than 2");
    if (s.size() == 2) {
      symbol.emplace(s[0], symbol.size());
      symbol.emplace(s[1], symbol.size());
    }
  }
  const std::size_t m = symbol.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<long> balance(m, 0);
  std::size_t length = 0;
  for (const auto& s : inputs) {
    if (s.size() == 1) {
      ++length;
      continue;
    }
    const auto a = symbol.at(s[0]);
    const auto b = symbol.at(s[1]);
    ++length;
    --balance[a];
    ++balance[b];
    parent[find(a)] = find(b);
  }
  std::map<std::size_t, std::size_t> imbalance;
  for (std::size_t x = 0; x < m; ++x) imbalance[find(x)] += static_cast<std::size_t>(std::labs(balance[x]));
  for (const auto& [root, total] : imbalance) length += std::max<std::size_t>(1, total / 2);
  return length;
}

/// Distinct length-k substrings of s, in order of first occurrence.
inline InputSet spectrum(const std::string& s, std::size_t k) {
  if (k < 1 || k > s.size()) {
    throw PreconditionError("spectrum: k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(s.size()) + "]");
  }
  std::vector<std::string> windows;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + k <= s.size(); ++i) {
    auto w = s.substr(i, k);
    if (seen.insert(w).second) windows.push_back(std::move(w));
  }
  return InputSet(std::move(windows));
}

/// {cc(ae)^n, (ea)^(n+1), (ae)^n cc}: the classical greedy algorithm nearly
/// doubles the optimum on it.
inline InputSet tough(std::size_t n) {
  if (n < 1) throw PreconditionError("tough: n must be at least 1");
  std::string ae, ea;
  for (std::size_t i = 0; i < n; ++i) ae += "ae";
  for (std::size_t i = 0; i <= n; ++i) ea += "ea";
  return InputSet({"cc" + ae, ea, ae + "cc"});
}

}  // namespace scs
