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

// Greedy Hierarchical Algorithm: build an Eulerian solution top-down,
// balancing every touched vertex with lower arcs and giving each Eulerian
// component one pair of lower arcs at its last chance to connect.

#pragma once

#include <cstddef>
#include <vector>

#include "scs/eulerian.hpp"
#include "scs/hgraph.hpp"

namespace scs {

struct GhaOptions {
  /// The component rescue step. Disabling it yields an optimal cycle cover.
  bool last_chance = true;
};

struct GhaStats {
  std::size_t balancing_arcs = 0;
  std::size_t last_chance_pairs = 0;
  /// Balanced Eulerian components (not containing epsilon) whose shortest
  /// vertices lay below the level being processed, so the rescue pair was
  /// not added at this vertex.
  std::size_t shortest_below_level = 0;
};

/// Partial solution after the initial arcs (level = max_level + 1) and after
/// each processed level.
struct GhaSnapshot {
  std::size_t level = 0;
  ArcMultiset solution;
};

inline ArcMultiset greedy_hierarchical(const HierarchicalGraph& hg, const GhaOptions& options = {},
                                       GhaStats* stats = nullptr,
                                       std::vector<GhaSnapshot>* snapshots = nullptr) {
  GhaStats local;
  GhaStats& st = stats ? *stats : local;
  ArcMultiset d(hg);
  for (VertexId s : hg.input_vertices()) {
    d.add_up(s);
    d.add_down(s);
  }
  if (snapshots) snapshots->push_back({hg.max_level() + 1, d});

  for (std::size_t level = hg.max_level(); level >= 1; --level) {
    for (VertexId v : hg.vertices_at_level(level)) {
      // Untouched vertices have no component in D.
      if (!has_arcs(hg, d, v)) continue;
      const auto in_above = in_from_above(hg, d, v);
      const auto out_above = out_to_above(hg, d, v);
      if (in_above != out_above) {
        const auto diff = static_cast<ArcMultiset::Count>(in_above > out_above ? in_above - out_above
                                                                              : out_above - in_above);
        if (in_above > out_above) {
          d.add_down(v, diff);
        } else {
          d.add_up(v, diff);
        }
        st.balancing_arcs += diff;
        continue;
      }
      if (!options.last_chance) continue;

      const auto component = component_of(hg, d, v);
      bool eulerian = true;
      bool has_epsilon = false;
      std::size_t shortest = level;
      VertexId largest_shortest = v;
      for (VertexId u : component) {
        if (u == HierarchicalGraph::epsilon()) has_epsilon = true;
        if (eulerian && in_degree(hg, d, u) != out_degree(hg, d, u)) eulerian = false;
        if (hg.level(u) < shortest || (hg.level(u) == shortest && u > largest_shortest)) {
          shortest = hg.level(u);
          largest_shortest = u;
        }
      }
      if (!eulerian || has_epsilon) continue;
      if (shortest < level) {
        ++st.shortest_below_level;
        continue;
      }
      if (largest_shortest == v) {
        d.add_up(v);
        d.add_down(v);
        ++st.last_chance_pairs;
      }
    }
    if (snapshots) snapshots->push_back({level, d});
  }
  return d;
}

/// The Greedy Hierarchical Algorithm solution.
inline ArcMultiset gha(const HierarchicalGraph& hg, GhaStats* stats = nullptr) {
  return greedy_hierarchical(hg, {}, stats);
}

/// GHA without the component rescue step: balanced, covers every input,
/// possibly disconnected.
inline ArcMultiset gha_cycle_cover(const HierarchicalGraph& hg) {
  return greedy_hierarchical(hg, GhaOptions{.last_chance = false});
}

}  // namespace scs
