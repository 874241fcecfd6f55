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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "scs/error.hpp"
#include "scs/strings.hpp"

namespace scs {

using VertexId = std::uint32_t;

/// The hierarchical graph of an input set: one vertex per distinct substring
/// of the inputs (including the empty string), an implicit up-arc
/// (pref1(v), v) of weight 1 and down-arc (v, suff1(v)) of weight 0 for
/// every non-empty vertex v.
///
/// Vertices are numbered by level (string length) ascending and
/// lexicographically within a level, so the empty string is vertex 0 and
/// every level occupies a contiguous id range.
class HierarchicalGraph {
 public:
  HierarchicalGraph() = default;

  explicit HierarchicalGraph(InputSet inputs) : inputs_(std::move(inputs)) {
    std::vector<std::string> subs;
    {
      std::unordered_set<std::string> seen{std::string()};
      for (const auto& s : inputs_) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t len = 1; i + len <= s.size(); ++len) seen.insert(s.substr(i, len));
        }
      }
      subs.reserve(seen.size());
      subs.assign(seen.begin(), seen.end());
    }
    std::sort(subs.begin(), subs.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    const std::size_t n = subs.size();
    labels_ = std::move(subs);
    index_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) index_.emplace(labels_[v], static_cast<VertexId>(v));

    max_level_ = labels_.back().size();
    level_begin_.assign(max_level_ + 2, 0);
    for (std::size_t v = 0; v < n; ++v) ++level_begin_[labels_[v].size() + 1];
    for (std::size_t l = 1; l < level_begin_.size(); ++l) level_begin_[l] += level_begin_[l - 1];

    pref_of_.assign(n, 0);
    suff_of_.assign(n, 0);
    children_up_.assign(n, {});
    parents_down_.assign(n, {});
    for (std::size_t v = 1; v < n; ++v) {
      const std::string_view label = labels_[v];
      const VertexId p = index_.at(std::string(label.substr(0, label.size() - 1)));
      const VertexId q = index_.at(std::string(label.substr(1)));
      pref_of_[v] = p;
      suff_of_[v] = q;
      children_up_[p].push_back(static_cast<VertexId>(v));
      parents_down_[q].push_back(static_cast<VertexId>(v));
    }

    ids_.resize(n);
    for (std::size_t v = 0; v < n; ++v) ids_[v] = static_cast<VertexId>(v);

    is_input_.assign(n, false);
    for (const auto& s : inputs_) {
      const VertexId v = index_.at(s);
      input_vertices_.push_back(v);
      is_input_[v] = true;
    }
  }

  const InputSet& inputs() const noexcept { return inputs_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  static constexpr VertexId epsilon() noexcept { return 0; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::size_t level(VertexId v) const { return labels_[v].size(); }

  /// pref1(v) and suff1(v) as vertices; undefined for epsilon.
  VertexId pref_of(VertexId v) const { return pref_of_[v]; }
  VertexId suff_of(VertexId v) const { return suff_of_[v]; }

  /// Vertices w with pref1(w) = v, in lexicographic order.
  std::span<const VertexId> children_up(VertexId v) const { return children_up_[v]; }
  /// Vertices u with suff1(u) = v, in lexicographic order.
  std::span<const VertexId> parents_down(VertexId v) const { return parents_down_[v]; }

  bool is_input(VertexId v) const { return is_input_[v]; }
  /// Vertex of the i-th input string.
  VertexId input_vertex(std::size_t i) const { return input_vertices_[i]; }
  std::span<const VertexId> input_vertices() const noexcept { return input_vertices_; }

  std::optional<VertexId> find(const std::string& s) const {
    if (auto it = index_.find(s); it != index_.end()) return it->second;
    return std::nullopt;
  }

  /// Length of the longest input.
  std::size_t max_level() const noexcept { return max_level_; }

  /// Vertices of level `l` in lexicographic order.
  std::span<const VertexId> vertices_at_level(std::size_t l) const {
    if (l > max_level_) {
      throw PreconditionError("vertices_at_level: level " + std::to_string(l) + " out of range");
    }
    return std::span<const VertexId>(ids_).subspan(level_begin_[l], level_begin_[l + 1] - level_begin_[l]);
  }

 private:
  InputSet inputs_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> level_begin_;
  std::size_t max_level_ = 0;
  std::vector<VertexId> pref_of_;
  std::vector<VertexId> suff_of_;
  std::vector<std::vector<VertexId>> children_up_;
  std::vector<std::vector<VertexId>> parents_down_;
  std::vector<VertexId> ids_;
  std::vector<bool> is_input_;
  std::vector<VertexId> input_vertices_;
};

}  // namespace scs
