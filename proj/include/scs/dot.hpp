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

// Graphviz DOT rendering of a hierarchical graph, optionally overlaid with
// an arc multiset. One rank per level, inputs drawn as boxes.

#pragma once

#include <sstream>
#include <string>

#include "scs/eulerian.hpp"
#include "scs/hgraph.hpp"

namespace scs {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Renders `hg`. Without an overlay every arc of the graph is drawn in
/// grey; with one, only arcs of positive multiplicity are drawn, labelled
/// with their multiplicity. Up-arcs are solid, down-arcs dashed.
inline std::string to_dot(const HierarchicalGraph& hg, const ArcMultiset* overlay = nullptr,
                          const std::string& name = "HG") {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(name) << "\" {\n";
  out << "  rankdir=BT;\n  node [fontname=\"monospace\"];\n";
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    const std::string label = v == HierarchicalGraph::epsilon() ? "ε" : detail::dot_escape(hg.label(v));
    out << "  v" << v << " [label=\"" << label << "\", shape=" << (hg.is_input(v) ? "box" : "ellipse")
        << "];\n";
  }
  for (std::size_t level = 0; level <= hg.max_level(); ++level) {
    out << "  { rank=same;";
    for (VertexId v : hg.vertices_at_level(level)) out << " v" << v << ';';
    out << " }\n";
  }
  for (VertexId v = 1; v < hg.vertex_count(); ++v) {
    if (overlay == nullptr) {
      out << "  v" << hg.pref_of(v) << " -> v" << v << " [color=grey];\n";
      out << "  v" << v << " -> v" << hg.suff_of(v) << " [color=grey, style=dashed];\n";
      continue;
    }
    if (overlay->up(v) > 0) {
      out << "  v" << hg.pref_of(v) << " -> v" << v << " [label=\"" << overlay->up(v) << "\"];\n";
    }
    if (overlay->down(v) > 0) {
      out << "  v" << v << " -> v" << hg.suff_of(v) << " [label=\"" << overlay->down(v)
          << "\", style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace scs
