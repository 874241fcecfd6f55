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

// String primitives for superstring problems: overlaps, prefix/suffix
// helpers, merging, substring-free reduction and permutation lengths.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scs/error.hpp"

namespace scs {

namespace detail {

// Knuth-Morris-Pratt failure function: fail[i] is the length of the longest
// proper border of t[0..i].
inline std::vector<std::size_t> failure_function(std::string_view t) {
  std::vector<std::size_t> fail(t.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    while (k > 0 && t[i] != t[k]) k = fail[k - 1];
    if (t[i] == t[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace detail

/// Length of the longest suffix of `s` that is also a prefix of `t`.
///
/// No properness cap is applied, so `overlap_length(s, s) == s.size()`.
/// Runs the failure-function automaton of `t` over the last
/// `min(|s|, |t|)` symbols of `s`, which is linear in that size.
inline std::size_t overlap_length(std::string_view s, std::string_view t) {
  if (s.empty() || t.empty()) return 0;
  const auto fail = detail::failure_function(t);
  const std::size_t window = std::min(s.size(), t.size());
  std::size_t q = 0;
  for (char c : s.substr(s.size() - window)) {
    if (q == t.size()) q = fail[q - 1];
    while (q > 0 && t[q] != c) q = fail[q - 1];
    if (t[q] == c) ++q;
  }
  return q;
}

inline std::string overlap(std::string_view s, std::string_view t) {
  return std::string(t.substr(0, overlap_length(s, t)));
}

/// Longest proper border of `s`: the overlap of `s` with itself when the
/// whole string is excluded. Used for single-string cycles.
inline std::size_t self_overlap_length(std::string_view s) {
  if (s.empty()) return 0;
  return detail::failure_function(s).back();
}

/// First |s| - |overlap(s,t)| symbols of s.
inline std::string pref_pair(std::string_view s, std::string_view t) {
  return std::string(s.substr(0, s.size() - overlap_length(s, t)));
}

/// Last |t| - |overlap(s,t)| symbols of t.
inline std::string suff_pair(std::string_view s, std::string_view t) {
  return std::string(t.substr(overlap_length(s, t)));
}

/// `s` without its last symbol.
inline std::string pref1(std::string_view s) {
  if (s.empty()) throw PreconditionError("pref1: empty string");
  return std::string(s.substr(0, s.size() - 1));
}

/// `s` without its first symbol.
inline std::string suff1(std::string_view s) {
  if (s.empty()) throw PreconditionError("suff1: empty string");
  return std::string(s.substr(1));
}

/// Shortest superstring of the ordered pair (s, t): pref_pair(s,t) + t.
inline std::string merge(std::string_view s, std::string_view t) {
  std::string out = pref_pair(s, t);
  out.append(t);
  return out;
}

/// A non-empty, duplicate-free, substring-free list of input strings.
/// The order of the list is the canonical order of the inputs.
class InputSet {
 public:
  InputSet() = default;

  /// Validates every invariant; throws PreconditionError on violation.
  /// Use reduce_substring_free() to build a set from arbitrary strings.
  explicit InputSet(std::vector<std::string> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) throw PreconditionError("InputSet: no strings");
    for (std::size_t i = 0; i < strings_.size(); ++i) {
      if (strings_[i].empty()) throw PreconditionError("InputSet: empty string");
      for (std::size_t j = 0; j < strings_.size(); ++j) {
        if (i == j) continue;
        if (strings_[j].find(strings_[i]) != std::string::npos) {
          throw PreconditionError("InputSet: \"" + strings_[i] + "\" is contained in \"" +
                                  strings_[j] + "\"");
        }
      }
    }
    for (const auto& s : strings_) alphabet_.append(s);
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  }

  std::size_t size() const noexcept { return strings_.size(); }
  bool empty() const noexcept { return strings_.empty(); }
  const std::string& operator[](std::size_t i) const { return strings_[i]; }
  const std::vector<std::string>& strings() const noexcept { return strings_; }
  auto begin() const noexcept { return strings_.begin(); }
  auto end() const noexcept { return strings_.end(); }

  /// Distinct symbols in byte order.
  const std::string& alphabet() const noexcept { return alphabet_; }

  std::size_t total_length() const noexcept {
    std::size_t total = 0;
    for (const auto& s : strings_) total += s.size();
    return total;
  }

  std::size_t max_length() const noexcept {
    std::size_t m = 0;
    for (const auto& s : strings_) m = std::max(m, s.size());
    return m;
  }

  friend bool operator==(const InputSet&, const InputSet&) = default;

 private:
  std::vector<std::string> strings_;
  std::string alphabet_;
};

/// Drops duplicates and strings contained in other strings, keeping the
/// relative order of survivors. Throws PreconditionError when nothing
/// survives (all strings empty or no strings at all).
inline InputSet reduce_substring_free(std::span<const std::string> raw) {
  std::vector<std::string> unique;
  std::unordered_set<std::string> seen;
  for (const auto& s : raw) {
    if (s.empty()) continue;
    if (seen.insert(s).second) unique.push_back(s);
  }
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < unique.size() && !contained; ++j) {
      contained = i != j && unique[j].size() > unique[i].size() &&
                  unique[j].find(unique[i]) != std::string::npos;
    }
    if (!contained) kept.push_back(unique[i]);
  }
  if (kept.empty()) throw PreconditionError("reduce_substring_free: empty result");
  return InputSet(std::move(kept));
}

inline InputSet reduce_substring_free(std::initializer_list<std::string> raw) {
  const std::vector<std::string> v(raw);
  return reduce_substring_free(std::span<const std::string>(v));
}

/// An ordering of the inputs of an InputSet, stored as 0-based indices.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
    std::vector<bool> hit(order_.size(), false);
    for (auto i : order_) {
      if (i >= order_.size() || hit[i]) throw PreconditionError("Permutation: not a bijection");
      hit[i] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Permutation(std::move(order));
  }

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Sum of input lengths minus the overlaps of consecutive inputs in `order`.
inline std::size_t permutation_length(const InputSet& inputs, const Permutation& order) {
  if (order.size() != inputs.size()) {
    throw PreconditionError("permutation_length: permutation size mismatch");
  }
  std::size_t length = inputs.total_length();
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    length -= overlap_length(inputs[order[k]], inputs[order[k + 1]]);
  }
  return length;
}

/// The superstring obtained by overlapping the inputs in `order`.
inline std::string permutation_superstring(const InputSet& inputs, const Permutation& order) {
  if (order.size() != inputs.size()) {
    throw PreconditionError("permutation_superstring: permutation size mismatch");
  }
  std::string out = inputs[order[0]];
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& next = inputs[order[k]];
    out.append(next, overlap_length(inputs[order[k - 1]], next));
  }
  return out;
}

}  // namespace scs
