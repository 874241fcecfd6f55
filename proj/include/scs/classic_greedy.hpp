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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scs/error.hpp"
#include "scs/random.hpp"
#include "scs/strings.hpp"

namespace scs {

/// How the classical greedy algorithm picks among ordered pairs that tie
/// for the maximum overlap.
struct TieBreakPolicy {
  enum class Kind { input_order, lexicographic_pair, seeded_random };

  Kind kind = Kind::input_order;
  std::uint64_t seed = 0;

  /// First tied pair (i, j) by position in the current working list.
  static TieBreakPolicy input_order() { return {Kind::input_order, 0}; }
  /// Tied pair with the smallest (first string, second string).
  static TieBreakPolicy lexicographic_pair() { return {Kind::lexicographic_pair, 0}; }
  /// Uniformly random tied pair, drawn from SplitMix64(seed).
  static TieBreakPolicy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::input_order: return "input-order";
      case Kind::lexicographic_pair: return "lexicographic-pair";
      case Kind::seeded_random: return "seeded-random:" + std::to_string(seed);
    }
    return {};
  }

  /// Parses "input-order", "lexicographic-pair" or "seeded-random[:<seed>]".
  static TieBreakPolicy parse(std::string_view text) {
    if (text == "input-order") return input_order();
    if (text == "lexicographic-pair") return lexicographic_pair();
    constexpr std::string_view random_prefix = "seeded-random";
    if (text.substr(0, random_prefix.size()) == random_prefix) {
      auto rest = text.substr(random_prefix.size());
      if (rest.empty()) return seeded_random(0);
      if (rest.front() == ':') {
        rest.remove_prefix(1);
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
        if (ec == std::errc() && ptr == rest.data() + rest.size()) return seeded_random(seed);
      }
    }
    throw InputError("unknown tie-break policy: " + std::string(text));
  }

  friend bool operator==(const TieBreakPolicy&, const TieBreakPolicy&) = default;
};

struct GreedyResult {
  std::string superstring;
  /// Inputs in the order they appear in the superstring.
  Permutation order;
};

/// Classical greedy algorithm: while more than one string remains, merge an
/// ordered pair (s, t) of distinct working strings with the longest
/// overlap, ties broken by `policy`. The merged string takes the place of s.
inline GreedyResult ga(const InputSet& inputs, const TieBreakPolicy& policy = {}) {
  struct Item {
    std::string text;
    std::vector<std::size_t> chain;
  };
  std::vector<Item> items;
  items.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) items.push_back({inputs[i], {i}});

  SplitMix64 rng(policy.seed);
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  while (items.size() > 1) {
    std::size_t best = 0;
    ties.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (i == j) continue;
        const auto ov = overlap_length(items[i].text, items[j].text);
        if (ties.empty() || ov > best) {
          best = ov;
          ties.assign(1, {i, j});
        } else if (ov == best) {
          ties.emplace_back(i, j);
        }
      }
    }
    std::pair<std::size_t, std::size_t> pick = ties.front();
    switch (policy.kind) {
      case TieBreakPolicy::Kind::input_order:
        break;
      case TieBreakPolicy::Kind::lexicographic_pair:
        pick = *std::min_element(ties.begin(), ties.end(), [&](const auto& a, const auto& b) {
          const auto ka = std::tie(items[a.first].text, items[a.second].text);
          const auto kb = std::tie(items[b.first].text, items[b.second].text);
          return ka < kb;
        });
        break;
      case TieBreakPolicy::Kind::seeded_random:
        pick = ties[rng.below(ties.size())];
        break;
    }
    auto [i, j] = pick;
    items[i].text = merge(items[i].text, items[j].text);
    items[i].chain.insert(items[i].chain.end(), items[j].chain.begin(), items[j].chain.end());
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return {std::move(items.front().text), Permutation(std::move(items.front().chain))};
}

/// Whether `order` can be produced by some run of the classical greedy
/// algorithm.
///
/// Simulates merging neighbours of the sequence in order of decreasing
/// overlap; before each merge, no ordered pair of distinct working strings
/// may overlap more than the neighbours being merged. Every neighbour pair
/// tied for the maximum is tried (with memoization of failed states) before
/// answering false.
inline bool verify_greedy_permutation(const InputSet& inputs, const Permutation& order) {
  if (order.size() != inputs.size()) {
    throw PreconditionError("verify_greedy_permutation: permutation size mismatch");
  }
  const std::size_t n = order.size();
  if (n <= 1) return true;
  if (n > 64) throw LimitError("verify_greedy_permutation: more than 64 strings");

  // A state is the set of boundaries (k between order[k] and order[k+1])
  // already merged.
  std::unordered_set<std::uint64_t> failed;

  auto blocks_of = [&](std::uint64_t merged) {
    std::vector<std::string> blocks{inputs[order[0]]};
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const auto& next = inputs[order[k + 1]];
      if (merged >> k & 1U) {
        blocks.back() = merge(blocks.back(), next);
      } else {
        blocks.push_back(next);
      }
    }
    return blocks;
  };

  auto search = [&](auto&& self, std::uint64_t merged, std::size_t merges) -> bool {
    if (merges == n - 1) return true;
    if (failed.count(merged)) return false;
    const auto blocks = blocks_of(merged);
    std::vector<std::size_t> boundary;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!(merged >> k & 1U)) boundary.push_back(k);
    }
    std::vector<std::size_t> neighbour(blocks.size() - 1);
    std::size_t best = 0;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
      neighbour[b] = overlap_length(blocks[b], blocks[b + 1]);
      best = std::max(best, neighbour[b]);
    }
    for (std::size_t p = 0; p < blocks.size(); ++p) {
      for (std::size_t q = 0; q < blocks.size(); ++q) {
        if (p != q && overlap_length(blocks[p], blocks[q]) > best) {
          failed.insert(merged);
          return false;
        }
      }
    }
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
      if (neighbour[b] == best && self(self, merged | (std::uint64_t{1} << boundary[b]), merges + 1)) {
        return true;
      }
    }
    failed.insert(merged);
    return false;
  };
  return search(search, 0, 0);
}

}  // namespace scs
