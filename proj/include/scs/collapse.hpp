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

// Collapsing: replacing an arc pair (pref1(v), v), (v, suff1(v)) with
// (pref1(v), x), (x, suff1(v)) for x = pref1(suff1(v)), or deleting the
// pair when |v| = 1, and the level-by-level normalization built on it.

#pragma once

#include <cstddef>
#include <vector>

#include "scs/error.hpp"
#include "scs/eulerian.hpp"
#include "scs/hgraph.hpp"

namespace scs {

struct CollapseOptions {
  /// Repeat the lexicographic pass over a level until it performs no
  /// collapse. Off by default: one pass per level.
  bool fixed_point = false;
  /// Probe each tentative collapse with a full is_eulerian_solution() check
  /// instead of the local reasoning in collapse_keeps_valid().
  bool full_probe = false;
};

/// One performed collapse; multiplicities are those of `vertex` afterwards.
struct CollapseStep {
  std::size_t level = 0;
  VertexId vertex = 0;
  ArcMultiset::Count up_after = 0;
  ArcMultiset::Count down_after = 0;
};

inline bool has_collapsible_pair(const ArcMultiset& d, VertexId v) {
  return v != HierarchicalGraph::epsilon() && d.up(v) >= 1 && d.down(v) >= 1;
}

/// In-place Collapse. Throws PreconditionError when the pair is absent.
inline void collapse_in_place(const HierarchicalGraph& hg, ArcMultiset& d, VertexId v) {
  if (!has_collapsible_pair(d, v)) {
    throw PreconditionError("collapse: vertex \"" + hg.label(v) + "\" lacks an up/down arc pair");
  }
  d.remove_up(v);
  d.remove_down(v);
  if (hg.level(v) > 1) {
    d.add_down(hg.pref_of(v));
    d.add_up(hg.suff_of(v));
  }
}

inline ArcMultiset collapse_at(const HierarchicalGraph& hg, ArcMultiset d, VertexId v) {
  collapse_in_place(hg, d, v);
  return d;
}

/// Whether collapsing v keeps an Eulerian solution `d` Eulerian.
///
/// Balance is always preserved. If v keeps a lower arc, connectivity is
/// unchanged: pref1(v) and suff1(v) stay joined through pref1(suff1(v)) and
/// v stays attached to one of them. If v loses every arc it must not be an
/// input. For |v| = 1 epsilon must keep an arc. Only when v keeps arcs to
/// the level above but none below is a connectivity search needed.
inline bool collapse_keeps_valid(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v,
                                 bool full_probe = false) {
  if (!has_collapsible_pair(d, v)) {
    throw PreconditionError("collapse_keeps_valid: vertex \"" + hg.label(v) +
                            "\" lacks an up/down arc pair");
  }
  if (full_probe) return is_eulerian_solution(hg, collapse_at(hg, d, v)).ok();

  if (d.up(v) > 1 || d.down(v) > 1) return true;
  if (hg.level(v) == 1) {
    const auto eps = HierarchicalGraph::epsilon();
    if (in_degree(hg, d, eps) + out_degree(hg, d, eps) == 2) return false;
  }
  if (in_from_above(hg, d, v) == 0 && out_to_above(hg, d, v) == 0) return !hg.is_input(v);
  return arcs_connected(hg, collapse_at(hg, d, v));
}

/// Collapsing Algorithm: for each level from the top down to 1 and each
/// vertex of the level in ascending lexicographic order, collapse the
/// vertex while its pair is present and the result stays Eulerian.
/// Never increases the weight.
inline ArcMultiset ca(const HierarchicalGraph& hg, ArcMultiset d, const CollapseOptions& options = {},
                      std::vector<CollapseStep>* trace = nullptr) {
  if (!is_eulerian_solution(hg, d)) throw PreconditionError("ca: input is not an Eulerian solution");
  for (std::size_t level = hg.max_level(); level >= 1; --level) {
    bool changed = false;
    do {
      changed = false;
      for (VertexId v : hg.vertices_at_level(level)) {
        while (has_collapsible_pair(d, v) && collapse_keeps_valid(hg, d, v, options.full_probe)) {
          collapse_in_place(hg, d, v);
          changed = true;
          if (trace) trace->push_back({level, v, d.up(v), d.down(v)});
        }
      }
    } while (options.fixed_point && changed);
  }
  return d;
}

/// True when no vertex admits a collapse that keeps `d` Eulerian.
inline bool is_normalized(const HierarchicalGraph& hg, const ArcMultiset& d) {
  for (VertexId v = 1; v < hg.vertex_count(); ++v) {
    if (has_collapsible_pair(d, v) && collapse_keeps_valid(hg, d, v)) return false;
  }
  return true;
}

}  // namespace scs
