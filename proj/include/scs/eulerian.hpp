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

// Eulerian solutions in the hierarchical graph, represented as arc
// multisets: validation, zig-zag construction from permutations,
// disjoint union, circuit extraction and spelling.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scs/error.hpp"
#include "scs/hgraph.hpp"
#include "scs/strings.hpp"

namespace scs {

/// A multiset of arcs of a hierarchical graph. Every arc of the graph is
/// either the unique up-arc (pref1(v), v) or the unique down-arc
/// (v, suff1(v)) of exactly one non-empty vertex v, so a multiset is two
/// multiplicity counters per vertex. The counters of epsilon stay zero.
class ArcMultiset {
 public:
  using Count = std::uint32_t;

  ArcMultiset() = default;
  explicit ArcMultiset(std::size_t vertex_count) : up_(vertex_count, 0), down_(vertex_count, 0) {}
  explicit ArcMultiset(const HierarchicalGraph& hg) : ArcMultiset(hg.vertex_count()) {}

  std::size_t vertex_count() const noexcept { return up_.size(); }

  /// Multiplicity of the up-arc (pref1(v), v).
  Count up(VertexId v) const { return up_[v]; }
  /// Multiplicity of the down-arc (v, suff1(v)).
  Count down(VertexId v) const { return down_[v]; }

  void add_up(VertexId v, Count k = 1) {
    check_owner(v);
    up_[v] += k;
  }
  void add_down(VertexId v, Count k = 1) {
    check_owner(v);
    down_[v] += k;
  }

  void remove_up(VertexId v, Count k = 1) {
    if (up_[v] < k) throw PreconditionError("ArcMultiset: up-arc multiplicity underflow");
    up_[v] -= k;
  }
  void remove_down(VertexId v, Count k = 1) {
    if (down_[v] < k) throw PreconditionError("ArcMultiset: down-arc multiplicity underflow");
    down_[v] -= k;
  }

  /// Number of up-arcs counted with multiplicity: the length of the
  /// superstring this multiset spells.
  std::uint64_t weight() const noexcept {
    std::uint64_t w = 0;
    for (auto c : up_) w += c;
    return w;
  }

  /// Total number of arcs counted with multiplicity.
  std::uint64_t arc_count() const noexcept {
    std::uint64_t total = weight();
    for (auto c : down_) total += c;
    return total;
  }

  bool empty() const noexcept { return arc_count() == 0; }

  /// Pointwise sum of multiplicities.
  ArcMultiset& operator+=(const ArcMultiset& other) {
    if (other.vertex_count() != vertex_count()) {
      throw PreconditionError("ArcMultiset: union of multisets over different graphs");
    }
    for (std::size_t v = 0; v < up_.size(); ++v) {
      up_[v] += other.up_[v];
      down_[v] += other.down_[v];
    }
    return *this;
  }

  friend bool operator==(const ArcMultiset&, const ArcMultiset&) = default;

 private:
  void check_owner(VertexId v) const {
    if (v == HierarchicalGraph::epsilon()) throw PreconditionError("ArcMultiset: epsilon owns no arcs");
  }

  std::vector<Count> up_;
  std::vector<Count> down_;
};

/// D1 ⊔ D2: the multiset whose multiplicities are the pointwise sums.
inline ArcMultiset disjoint_union(ArcMultiset a, const ArcMultiset& b) {
  a += b;
  return a;
}

// Degree bookkeeping. "Above" arcs join v with level |v|+1, "lower" arcs
// join v with level |v|-1.

inline std::uint64_t in_from_above(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v) {
  std::uint64_t total = 0;
  for (VertexId u : hg.parents_down(v)) total += d.down(u);
  return total;
}

inline std::uint64_t out_to_above(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v) {
  std::uint64_t total = 0;
  for (VertexId w : hg.children_up(v)) total += d.up(w);
  return total;
}

inline std::uint64_t in_degree(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v) {
  return d.up(v) + in_from_above(hg, d, v);
}

inline std::uint64_t out_degree(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v) {
  return d.down(v) + out_to_above(hg, d, v);
}

inline bool has_arcs(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v) {
  if (d.up(v) > 0 || d.down(v) > 0) return true;
  for (VertexId w : hg.children_up(v)) {
    if (d.up(w) > 0) return true;
  }
  for (VertexId u : hg.parents_down(v)) {
    if (d.down(u) > 0) return true;
  }
  return false;
}

/// Calls fn(w) for every endpoint w joined to v by an arc of positive
/// multiplicity (in either direction). Endpoints may repeat.
template <typename Fn>
void for_each_neighbor(const HierarchicalGraph& hg, const ArcMultiset& d, VertexId v, Fn&& fn) {
  if (d.up(v) > 0) fn(hg.pref_of(v));
  if (d.down(v) > 0) fn(hg.suff_of(v));
  for (VertexId w : hg.children_up(v)) {
    if (d.up(w) > 0) fn(w);
  }
  for (VertexId u : hg.parents_down(v)) {
    if (d.down(u) > 0) fn(u);
  }
}

/// Weakly connected component of `start` under `d`, in BFS order.
inline std::vector<VertexId> component_of(const HierarchicalGraph& hg, const ArcMultiset& d,
                                          VertexId start) {
  std::vector<bool> seen(hg.vertex_count(), false);
  std::vector<VertexId> order{start};
  seen[start] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for_each_neighbor(hg, d, order[head], [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    });
  }
  return order;
}

/// True when all vertices with at least one incident arc lie in one weakly
/// connected component (vacuously true for the empty multiset).
inline bool arcs_connected(const HierarchicalGraph& hg, const ArcMultiset& d) {
  std::size_t touched = 0;
  std::optional<VertexId> first;
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (has_arcs(hg, d, v)) {
      ++touched;
      if (!first) first = v;
    }
  }
  if (!first) return true;
  return component_of(hg, d, *first).size() == touched;
}

struct ValidityReport {
  bool balanced = false;
  bool connected = false;
  bool covers_inputs = false;
  bool touches_epsilon = false;

  bool ok() const noexcept { return balanced && connected && covers_inputs && touches_epsilon; }
  explicit operator bool() const noexcept { return ok(); }
  friend bool operator==(const ValidityReport&, const ValidityReport&) = default;
};

inline bool is_balanced(const HierarchicalGraph& hg, const ArcMultiset& d) {
  for (VertexId v = 0; v < hg.vertex_count(); ++v) {
    if (in_degree(hg, d, v) != out_degree(hg, d, v)) return false;
  }
  return true;
}

inline bool covers_inputs(const HierarchicalGraph& hg, const ArcMultiset& d) {
  return std::all_of(hg.input_vertices().begin(), hg.input_vertices().end(),
                     [&](VertexId v) { return has_arcs(hg, d, v); });
}

/// Checks the four conditions of an Eulerian solution separately.
inline ValidityReport is_eulerian_solution(const HierarchicalGraph& hg, const ArcMultiset& d) {
  if (d.vertex_count() != hg.vertex_count()) {
    throw PreconditionError("is_eulerian_solution: multiset belongs to a different graph");
  }
  ValidityReport r;
  r.balanced = is_balanced(hg, d);
  r.connected = arcs_connected(hg, d);
  r.covers_inputs = covers_inputs(hg, d);
  r.touches_epsilon = has_arcs(hg, d, HierarchicalGraph::epsilon());
  return r;
}

/// Adds the down-path from v to its suffix of length `to_level`.
inline void add_down_path(const HierarchicalGraph& hg, ArcMultiset& d, VertexId v, std::size_t to_level) {
  while (hg.level(v) > to_level) {
    d.add_down(v);
    v = hg.suff_of(v);
  }
}

/// Adds the up-path from the prefix of v of length `from_level` to v.
inline void add_up_path(const HierarchicalGraph& hg, ArcMultiset& d, VertexId v, std::size_t from_level) {
  while (hg.level(v) > from_level) {
    d.add_up(v);
    v = hg.pref_of(v);
  }
}

/// The zig-zag solution of a permutation: the walk
/// ε → s1 → overlap(s1,s2) → s2 → ... → sn → ε, descending by down-arcs
/// to each overlap and ascending by up-arcs to the next input.
inline ArcMultiset zigzag(const HierarchicalGraph& hg, const Permutation& order) {
  const auto& inputs = hg.inputs();
  if (order.size() != inputs.size()) throw PreconditionError("zigzag: permutation size mismatch");
  ArcMultiset d(hg);
  add_up_path(hg, d, hg.input_vertex(order[0]), 0);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const std::size_t ov = overlap_length(inputs[order[k]], inputs[order[k + 1]]);
    add_down_path(hg, d, hg.input_vertex(order[k]), ov);
    add_up_path(hg, d, hg.input_vertex(order[k + 1]), ov);
  }
  add_down_path(hg, d, hg.input_vertex(order[order.size() - 1]), 0);
  return d;
}

struct SpellResult {
  std::string superstring;
  /// Inputs in order of first visit along the circuit.
  Permutation visit_order;
  /// The circuit as a vertex sequence starting and ending at epsilon.
  std::vector<VertexId> circuit;
};

/// Extracts an Eulerian circuit from epsilon (Hierholzer cycle splicing)
/// and spells it: each up-arc (u, uα) emits α, down-arcs emit nothing.
///
/// Arc choice is deterministic: a down-arc is taken before any up-arc, and
/// up-arcs ascend to the lexicographically smallest available child.
inline SpellResult spell(const HierarchicalGraph& hg, const ArcMultiset& d) {
  if (!is_eulerian_solution(hg, d)) throw PreconditionError("spell: not an Eulerian solution");
  const std::size_t n = hg.vertex_count();
  std::vector<ArcMultiset::Count> up(n), down(n);
  for (VertexId v = 0; v < n; ++v) {
    up[v] = d.up(v);
    down[v] = d.down(v);
  }
  std::vector<std::size_t> next_child(n, 0);

  std::vector<VertexId> stack{HierarchicalGraph::epsilon()};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    if (down[v] > 0) {
      --down[v];
      stack.push_back(hg.suff_of(v));
      continue;
    }
    const auto children = hg.children_up(v);
    auto& k = next_child[v];
    while (k < children.size() && up[children[k]] == 0) ++k;
    if (k < children.size()) {
      --up[children[k]];
      stack.push_back(children[k]);
      continue;
    }
    circuit.push_back(v);
    stack.pop_back();
  }
  std::reverse(circuit.begin(), circuit.end());

  SpellResult out;
  std::vector<bool> visited(hg.inputs().size(), false);
  std::vector<std::size_t> input_index(n, hg.inputs().size());
  for (std::size_t i = 0; i < hg.inputs().size(); ++i) input_index[hg.input_vertex(i)] = i;
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < circuit.size(); ++k) {
    const VertexId v = circuit[k];
    if (k > 0 && hg.level(v) > hg.level(circuit[k - 1])) out.superstring.push_back(hg.label(v).back());
    const auto i = input_index[v];
    if (i < visited.size() && !visited[i]) {
      visited[i] = true;
      order.push_back(i);
    }
  }
  out.visit_order = Permutation(std::move(order));
  out.circuit = std::move(circuit);
  return out;
}

/// Canonical JSON form: an array of [substring, up, down] triples for the
/// vertices with a non-zero counter, sorted by (level, lexicographic).
inline nlohmann::json to_json(const HierarchicalGraph& hg, const ArcMultiset& d) {
  auto out = nlohmann::json::array();
  for (VertexId v = 1; v < hg.vertex_count(); ++v) {
    if (d.up(v) == 0 && d.down(v) == 0) continue;
    out.push_back(nlohmann::json::array({hg.label(v), d.up(v), d.down(v)}));
  }
  return out;
}

inline std::string canonical_string(const HierarchicalGraph& hg, const ArcMultiset& d) {
  return to_json(hg, d).dump();
}

inline ArcMultiset arc_multiset_from_json(const HierarchicalGraph& hg, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("arc multiset JSON: expected an array of triples");
  ArcMultiset d(hg);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_number_unsigned() ||
        !t[2].is_number_unsigned()) {
      throw InputError("arc multiset JSON: expected [substring, up, down]");
    }
    const auto v = hg.find(t[0].get<std::string>());
    if (!v || *v == HierarchicalGraph::epsilon()) {
      throw InputError("arc multiset JSON: unknown vertex \"" + t[0].get<std::string>() + "\"");
    }
    d.add_up(*v, t[1].get<ArcMultiset::Count>());
    d.add_down(*v, t[2].get<ArcMultiset::Count>());
  }
  return d;
}

}  // namespace scs
