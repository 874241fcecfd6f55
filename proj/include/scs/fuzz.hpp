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

// Instance generators, conjecture checks and the campaign runner.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "scs/classic_greedy.hpp"
#include "scs/collapse.hpp"
#include "scs/dataset.hpp"
#include "scs/error.hpp"
#include "scs/eulerian.hpp"
#include "scs/greedy_hier.hpp"
#include "scs/hgraph.hpp"
#include "scs/oracles.hpp"
#include "scs/random.hpp"
#include "scs/strings.hpp"

namespace scs {

// ---------------------------------------------------------------------------
// Generators

/// A family of random instances. Sizes are upper bounds: every instance
/// draws its own size below them.
///
///   uniform:n=6,min=1,max=5,alpha=3   2..n strings, lengths in [min, max]
///   short:n=6,max=3,alpha=3           2..n strings, lengths in [1, max<=3]
///   spectrum:len=20,k=3,alpha=2       k-spectrum of a string of length k+1..len
///   tough:n=4                         tough(m) for m in 1..n
///
/// Symbols are the first `alpha` lowercase letters.
struct GeneratorSpec {
  enum class Kind { uniform, short_strings, spectrum, tough };

  Kind kind = Kind::uniform;
  std::size_t n = 6;
  std::size_t min_len = 1;
  std::size_t max_len = 5;
  std::size_t str_len = 20;
  std::size_t k = 3;
  std::size_t alphabet = 3;

  static GeneratorSpec uniform(std::size_t n, std::size_t min_len, std::size_t max_len, std::size_t alphabet) {
    GeneratorSpec g;
    g.kind = Kind::uniform;
    g.n = n;
    g.min_len = min_len;
    g.max_len = max_len;
    g.alphabet = alphabet;
    return g;
  }
  static GeneratorSpec short_strings(std::size_t max_len, std::size_t n, std::size_t alphabet) {
    GeneratorSpec g;
    g.kind = Kind::short_strings;
    g.n = n;
    g.min_len = 1;
    g.max_len = max_len;
    g.alphabet = alphabet;
    return g;
  }
  static GeneratorSpec spectrum(std::size_t str_len, std::size_t k, std::size_t alphabet) {
    GeneratorSpec g;
    g.kind = Kind::spectrum;
    g.str_len = str_len;
    g.k = k;
    g.alphabet = alphabet;
    return g;
  }
  static GeneratorSpec tough(std::size_t n) {
    GeneratorSpec g;
    g.kind = Kind::tough;
    g.n = n;
    return g;
  }

  void validate() const {
    auto fail = [&](const std::string& why) { throw InputError("generator " + to_string() + ": " + why); };
    if (alphabet < 1 || alphabet > 26) fail("alpha must be in [1, 26]");
    switch (kind) {
      case Kind::uniform:
        if (n < 2) fail("n must be at least 2");
        if (min_len < 1 || min_len > max_len) fail("need 1 <= min <= max");
        break;
      case Kind::short_strings:
        if (n < 2) fail("n must be at least 2");
        if (max_len < 1 || max_len > 3) fail("max must be in [1, 3]");
        break;
      case Kind::spectrum:
        if (k < 1 || k >= str_len) fail("need 1 <= k < len");
        break;
      case Kind::tough:
        if (n < 1) fail("n must be at least 1");
        break;
    }
  }

  std::string to_string() const {
    const auto num = [](std::size_t x) { return std::to_string(x); };
    switch (kind) {
      case Kind::uniform:
        return "uniform:n=" + num(n) + ",min=" + num(min_len) + ",max=" + num(max_len) + ",alpha=" + num(alphabet);
      case Kind::short_strings:
        return "short:n=" + num(n) + ",max=" + num(max_len) + ",alpha=" + num(alphabet);
      case Kind::spectrum:
        return "spectrum:len=" + num(str_len) + ",k=" + num(k) + ",alpha=" + num(alphabet);
      case Kind::tough:
        return "tough:n=" + num(n);
    }
    return {};
  }

  static GeneratorSpec parse(std::string_view text) {
    const auto colon = text.find(':');
    const auto kind_name = text.substr(0, colon);
    GeneratorSpec g;
    if (kind_name == "uniform") {
      g.kind = Kind::uniform;
    } else if (kind_name == "short") {
      g = short_strings(3, 6, 3);
    } else if (kind_name == "spectrum") {
      g = spectrum(20, 3, 2);
    } else if (kind_name == "tough") {
      g = tough(4);
    } else {
      throw InputError("unknown generator kind: " + std::string(kind_name));
    }
    std::string_view rest = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InputError("generator parameter without '=': " + std::string(item));
      const auto key = item.substr(0, eq);
      const auto value_text = item.substr(eq + 1);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
      if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
        throw InputError("generator parameter is not a number: " + std::string(item));
      }
      if (key == "n") {
        g.n = value;
      } else if (key == "min") {
        g.min_len = value;
      } else if (key == "max") {
        g.max_len = value;
      } else if (key == "len") {
        g.str_len = value;
      } else if (key == "k") {
        g.k = value;
      } else if (key == "alpha") {
        g.alphabet = value;
      } else {
        throw InputError("unknown generator parameter: " + std::string(key));
      }
    }
    g.validate();
    return g;
  }

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct Instance {
  InputSet inputs;
  std::uint64_t seed = 0;
  /// For spectrum instances: the generating string and window length.
  std::string spectrum_source;
  std::size_t spectrum_k = 0;
};

inline std::string random_string(SplitMix64& rng, std::size_t length, std::size_t alphabet) {
  std::string s(length, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng.below(alphabet));
  return s;
}

/// Draws an instance of at least two strings. Raw strings are reduced to a
/// substring-free set; draws that collapse to one string are discarded and
/// redrawn from the same stream. Identical (spec, seed) give identical
/// instances.
inline Instance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  spec.validate();
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Instance inst;
    inst.seed = seed;
    std::vector<std::string> raw;
    switch (spec.kind) {
      case GeneratorSpec::Kind::uniform:
      case GeneratorSpec::Kind::short_strings: {
        const auto count = rng.between(2, spec.n);
        for (std::uint64_t i = 0; i < count; ++i) {
          raw.push_back(random_string(rng, rng.between(spec.min_len, spec.max_len), spec.alphabet));
        }
        break;
      }
      case GeneratorSpec::Kind::spectrum: {
        inst.spectrum_source = random_string(rng, rng.between(spec.k + 1, spec.str_len), spec.alphabet);
        inst.spectrum_k = spec.k;
        raw = spectrum(inst.spectrum_source, spec.k).strings();
        break;
      }
      case GeneratorSpec::Kind::tough:
        raw = tough(rng.between(1, spec.n)).strings();
        break;
    }
    inst.inputs = reduce_substring_free(raw);
    if (inst.inputs.size() >= 2) return inst;
  }
  throw InputError("generator " + spec.to_string() + " keeps producing single-string instances");
}

// ---------------------------------------------------------------------------
// Random solutions

inline Permutation random_permutation(std::size_t n, SplitMix64& rng) {
  auto order = Permutation::identity(n).order();
  rng.shuffle(order);
  return Permutation(std::move(order));
}

namespace detail {

// Lengths l such that the last l symbols of a equal the first l of b, with
// l < min(|a|, |b|). Always contains 0.
inline std::vector<std::size_t> common_borders(const std::string& a, const std::string& b) {
  std::vector<std::size_t> out;
  const std::size_t limit = std::min(a.size(), b.size());
  for (std::size_t l = 0; l < limit; ++l) {
    if (a.compare(a.size() - l, l, b, 0, l) == 0) out.push_back(l);
  }
  return out;
}

inline std::size_t pick(SplitMix64& rng, const std::vector<std::size_t>& v) { return v[rng.below(v.size())]; }

}  // namespace detail

/// A random Eulerian solution that need not be normalized: a random input
/// order whose legs pass through a random common border (not necessarily
/// the longest overlap), plus up to `max_loops` closed detours
/// x → w → x through a random vertex w and one of its borders x already on
/// the walk.
inline ArcMultiset random_solution(const HierarchicalGraph& hg, SplitMix64& rng, std::size_t max_loops = 2) {
  const auto& inputs = hg.inputs();
  const auto order = random_permutation(inputs.size(), rng);
  ArcMultiset d(hg);
  add_up_path(hg, d, hg.input_vertex(order[0]), 0);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto& a = inputs[order[k]];
    const auto& b = inputs[order[k + 1]];
    const auto l = detail::pick(rng, detail::common_borders(a, b));
    add_down_path(hg, d, hg.input_vertex(order[k]), l);
    add_up_path(hg, d, hg.input_vertex(order[k + 1]), l);
  }
  add_down_path(hg, d, hg.input_vertex(order[order.size() - 1]), 0);

  const auto loops = rng.below(max_loops + 1);
  for (std::uint64_t i = 0; i < loops && hg.vertex_count() > 1; ++i) {
    const auto w = static_cast<VertexId>(rng.between(1, hg.vertex_count() - 1));
    const auto& label = hg.label(w);
    std::vector<std::size_t> anchors;
    for (auto l : detail::common_borders(label, label)) {
      VertexId x = w;
      while (hg.level(x) > l) x = hg.suff_of(x);
      if (x == HierarchicalGraph::epsilon() || has_arcs(hg, d, x)) anchors.push_back(l);
    }
    const auto l = detail::pick(rng, anchors);
    add_down_path(hg, d, w, l);
    add_up_path(hg, d, w, l);
  }
  return d;
}

/// A random cycle cover: each input s_i walks down to a random common
/// border with s_σ(i) and up to s_σ(i) for a random bijection σ. Balanced and
/// covering every input; usually disconnected.
inline ArcMultiset random_cycle_cover(const HierarchicalGraph& hg, SplitMix64& rng) {
  const auto& inputs = hg.inputs();
  const auto sigma = random_permutation(inputs.size(), rng);
  ArcMultiset d(hg);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto l = detail::pick(rng, detail::common_borders(inputs[i], inputs[sigma[i]]));
    add_down_path(hg, d, hg.input_vertex(i), l);
    add_up_path(hg, d, hg.input_vertex(sigma[i]), l);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Checks

enum class Check : std::uint32_t {
  collapsing = 1U << 0,
  gh = 1U << 1,
  strong = 1U << 2,
  pairs = 1U << 3,
  gha_fixpoint = 1U << 4,
  gha_greedy = 1U << 5,
  spectrum = 1U << 6,
  two_scs = 1U << 7,
  cycle_cover = 1U << 8,
  properties = 1U << 9,
};

inline constexpr Check kAllChecks[] = {Check::collapsing, Check::gh,          Check::strong,   Check::pairs,
                                       Check::gha_fixpoint, Check::gha_greedy, Check::spectrum, Check::two_scs,
                                       Check::cycle_cover,  Check::properties};

inline std::string check_name(Check c) {
  switch (c) {
    case Check::collapsing: return "collapsing";
    case Check::gh: return "gh";
    case Check::strong: return "strong";
    case Check::pairs: return "pairs";
    case Check::gha_fixpoint: return "gha_fixpoint";
    case Check::gha_greedy: return "gha_greedy";
    case Check::spectrum: return "spectrum";
    case Check::two_scs: return "two_scs";
    case Check::cycle_cover: return "cycle_cover";
    case Check::properties: return "properties";
  }
  return "unknown";
}

class CheckSet {
 public:
  CheckSet() = default;
  CheckSet(std::initializer_list<Check> checks) {
    for (auto c : checks) insert(c);
  }

  void insert(Check c) noexcept { bits_ |= static_cast<std::uint32_t>(c); }
  bool contains(Check c) const noexcept { return (bits_ & static_cast<std::uint32_t>(c)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }

  static CheckSet all() {
    CheckSet s;
    for (auto c : kAllChecks) s.insert(c);
    return s;
  }

  /// Comma-separated check names, or "all". Long aliases are accepted:
  /// greedy_hierarchical, gha_is_greedy, spectrum_optimal.
  static CheckSet parse(std::string_view text) {
    CheckSet s;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto name = text.substr(0, comma);
      text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
      if (name.empty()) continue;
      if (name == "all") {
        s = all();
        continue;
      }
      bool found = false;
      for (auto c : kAllChecks) {
        if (name == check_name(c) || (c == Check::gh && name == "greedy_hierarchical") ||
            (c == Check::gha_greedy && name == "gha_is_greedy") || (c == Check::spectrum && name == "spectrum_optimal")) {
          s.insert(c);
          found = true;
        }
      }
      if (!found) throw InputError("unknown check: " + std::string(name));
    }
    return s;
  }

  std::vector<Check> list() const {
    std::vector<Check> out;
    for (auto c : kAllChecks) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct CheckOutcome {
  Check check = Check::collapsing;
  bool holds = true;
  /// On failure: what diverged, usually canonical arc multisets.
  std::vector<std::string> details;
};

struct StartSolution {
  std::string name;
  ArcMultiset solution;
};

struct CampaignOptions {
  /// Largest instance for which the brute-force optimum is computed.
  std::size_t brute_limit = 7;
  std::size_t cycle_cover_limit = 7;
  /// Random-permutation zig-zag starts.
  std::size_t random_starts = 2;
  /// General (non-normalized) random Eulerian solutions used as starts.
  std::size_t random_solutions = 2;
  /// Random cycle covers for the strong check.
  std::size_t random_covers = 2;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
  CollapseOptions collapse;
};

/// Naive (input order) zig-zag, optimal zig-zag when the instance is small
/// enough, the GHA solution, random-permutation zig-zags and general random
/// solutions.
inline std::vector<StartSolution> default_starts(const HierarchicalGraph& hg, SplitMix64& rng,
                                                 const CampaignOptions& options = {},
                                                 const std::optional<BruteResult>& brute = std::nullopt,
                                                 const std::optional<ArcMultiset>& gha_solution = std::nullopt) {
  std::vector<StartSolution> starts;
  const auto n = hg.inputs().size();
  starts.push_back({"naive", zigzag(hg, Permutation::identity(n))});
  if (brute) {
    starts.push_back({"optimal", zigzag(hg, brute->order)});
  } else if (n <= options.brute_limit) {
    starts.push_back({"optimal", zigzag(hg, brute_optimal(hg.inputs()).order)});
  }
  starts.push_back({"gha", gha_solution ? *gha_solution : gha(hg)});
  for (std::size_t i = 0; i < options.random_starts; ++i) {
    starts.push_back({"perm#" + std::to_string(i), zigzag(hg, random_permutation(n, rng))});
  }
  for (std::size_t i = 0; i < options.random_solutions; ++i) {
    starts.push_back({"random#" + std::to_string(i), random_solution(hg, rng)});
  }
  return starts;
}

namespace detail {

inline void require_solution(const HierarchicalGraph& hg, const ArcMultiset& d, const std::string& what) {
  if (!is_eulerian_solution(hg, d)) throw PreconditionError(what + " is not an Eulerian solution");
}

inline void require_cover(const HierarchicalGraph& hg, const ArcMultiset& d, const std::string& what) {
  if (!is_balanced(hg, d) || !covers_inputs(hg, d)) {
    throw PreconditionError(what + " is not a balanced multiset covering every input");
  }
}

inline std::vector<ArcMultiset> collapse_doubled(const HierarchicalGraph& hg, const std::vector<StartSolution>& starts,
                                                 const CollapseOptions& options) {
  std::vector<ArcMultiset> out;
  out.reserve(starts.size());
  for (const auto& s : starts) {
    require_solution(hg, s.solution, "start " + s.name);
    out.push_back(ca(hg, disjoint_union(s.solution, s.solution), options));
  }
  return out;
}

inline CheckOutcome compare_against(Check check, const HierarchicalGraph& hg, const std::vector<StartSolution>& starts,
                                    const std::vector<ArcMultiset>& results, const ArcMultiset& reference,
                                    const std::string& reference_name) {
  CheckOutcome out{check, true, {}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i] == reference) continue;
    if (out.holds) out.details.push_back(reference_name + ": " + canonical_string(hg, reference));
    out.holds = false;
    out.details.push_back(starts[i].name + ": " + canonical_string(hg, results[i]));
  }
  return out;
}

}  // namespace detail

/// CA(D ⊔ D) is the same arc multiset for every start.
inline CheckOutcome check_collapsing(const HierarchicalGraph& hg, const std::vector<StartSolution>& starts,
                                     const CollapseOptions& options = {}) {
  const auto results = detail::collapse_doubled(hg, starts, options);
  if (results.empty()) return {Check::collapsing, true, {}};
  return detail::compare_against(Check::collapsing, hg, starts, results, results.front(),
                                 "CA of doubled " + starts.front().name);
}

/// CA(D ⊔ D) equals the GHA solution for every start.
inline CheckOutcome check_greedy_hierarchical(const HierarchicalGraph& hg, const std::vector<StartSolution>& starts,
                                              const CollapseOptions& options = {}) {
  const auto results = detail::collapse_doubled(hg, starts, options);
  return detail::compare_against(Check::gh, hg, starts, results, gha(hg), "gha");
}

/// gha_cycle_cover(S), D itself, and `random_covers` random cycle covers.
inline std::vector<StartSolution> default_covers(const HierarchicalGraph& hg, const ArcMultiset& d, SplitMix64& rng,
                                                 std::size_t random_covers = 2) {
  std::vector<StartSolution> covers{{"gha_cycle_cover", gha_cycle_cover(hg)}, {"solution", d}};
  for (std::size_t i = 0; i < random_covers; ++i) {
    covers.push_back({"cover#" + std::to_string(i), random_cycle_cover(hg, rng)});
  }
  return covers;
}

/// CA(D ⊔ CC) equals the GHA solution for every cycle cover CC.
inline CheckOutcome check_strong_collapsing(const HierarchicalGraph& hg, const ArcMultiset& d,
                                            const std::vector<StartSolution>& covers,
                                            const CollapseOptions& options = {}) {
  detail::require_solution(hg, d, "solution");
  std::vector<ArcMultiset> results;
  for (const auto& c : covers) {
    detail::require_cover(hg, c.solution, "cover " + c.name);
    results.push_back(ca(hg, disjoint_union(d, c.solution), options));
  }
  return detail::compare_against(Check::strong, hg, covers, results, gha(hg), "gha");
}

/// CA(D_i ⊔ D_{i+1}) equals the GHA solution for consecutive starts.
inline CheckOutcome check_pairwise_unions(const HierarchicalGraph& hg, const std::vector<StartSolution>& starts,
                                          const CollapseOptions& options = {}) {
  std::vector<StartSolution> unions;
  std::vector<ArcMultiset> results;
  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    detail::require_solution(hg, starts[i].solution, "start " + starts[i].name);
    unions.push_back({starts[i].name + "+" + starts[i + 1].name,
                      disjoint_union(starts[i].solution, starts[i + 1].solution)});
    results.push_back(ca(hg, unions.back().solution, options));
  }
  return detail::compare_against(Check::pairs, hg, unions, results, gha(hg), "gha");
}

/// CA(GHA ⊔ GHA) = GHA.
inline CheckOutcome check_gha_fixpoint(const HierarchicalGraph& hg, const CollapseOptions& options = {}) {
  const auto g = gha(hg);
  const auto result = ca(hg, disjoint_union(g, g), options);
  if (result == g) return {Check::gha_fixpoint, true, {}};
  return {Check::gha_fixpoint, false, {"gha: " + canonical_string(hg, g), "CA(gha+gha): " + canonical_string(hg, result)}};
}

/// Exact ratio weight(gha) / OPT.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  bool defined() const noexcept { return den != 0; }
  double value() const noexcept { return defined() ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
  /// Strict comparison; an undefined ratio is smaller than any defined one.
  friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
    if (!b.defined()) return false;
    if (!a.defined()) return true;
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct InstanceResult {
  std::vector<CheckOutcome> outcomes;
  Ratio gha_ratio;
  std::size_t shortest_below_level = 0;
};

/// Runs the selected checks on one instance. Randomized starts and covers
/// are drawn from a stream derived from the instance seed, so a replay of
/// the seed repeats every comparison. Checks that do not apply to the
/// instance (spectrum on non-spectrum instances, two_scs on long strings,
/// size-limited oracles) are skipped and produce no outcome.
inline InstanceResult evaluate_instance(const Instance& inst, const CheckSet& checks,
                                        const CampaignOptions& options = {}) {
  InstanceResult result;
  const HierarchicalGraph hg(inst.inputs);
  const auto& inputs = hg.inputs();
  const auto n = inputs.size();
  SplitMix64 rng(inst.seed ^ 0x6a09e667f3bcc909ULL);

  GhaStats stats;
  const auto g = gha(hg, &stats);
  result.shortest_below_level = stats.shortest_below_level;

  std::optional<BruteResult> brute;
  if (n <= options.brute_limit) {
    brute = brute_optimal(inputs, {.max_n = options.brute_limit});
    result.gha_ratio = {g.weight(), brute->length};
  }

  const bool need_starts = checks.contains(Check::collapsing) || checks.contains(Check::gh) ||
                           checks.contains(Check::pairs) || checks.contains(Check::strong) ||
                           checks.contains(Check::properties);
  std::vector<StartSolution> starts;
  if (need_starts) starts = default_starts(hg, rng, options, brute, g);

  std::vector<ArcMultiset> doubled;
  if (checks.contains(Check::collapsing) || checks.contains(Check::gh) || checks.contains(Check::properties)) {
    doubled = detail::collapse_doubled(hg, starts, options.collapse);
  }
  if (checks.contains(Check::collapsing)) {
    result.outcomes.push_back(detail::compare_against(Check::collapsing, hg, starts, doubled, doubled.front(),
                                                      "CA of doubled " + starts.front().name));
  }
  if (checks.contains(Check::gh)) {
    result.outcomes.push_back(detail::compare_against(Check::gh, hg, starts, doubled, g, "gha"));
  }
  if (checks.contains(Check::strong)) {
    const auto& base = starts.back().solution;
    result.outcomes.push_back(
        check_strong_collapsing(hg, base, default_covers(hg, base, rng, options.random_covers), options.collapse));
  }
  if (checks.contains(Check::pairs)) {
    result.outcomes.push_back(check_pairwise_unions(hg, starts, options.collapse));
  }
  if (checks.contains(Check::gha_fixpoint)) {
    result.outcomes.push_back(check_gha_fixpoint(hg, options.collapse));
  }
  if (checks.contains(Check::gha_greedy)) {
    CheckOutcome out{Check::gha_greedy, true, {}};
    const auto spelled = spell(hg, g);
    if (!verify_greedy_permutation(inputs, spelled.visit_order)) {
      out.holds = false;
      out.details.push_back("gha visit order is not a valid greedy permutation: " + spelled.superstring);
    }
    if (brute && 2 * g.weight() > 7 * brute->length) {
      out.holds = false;
      out.details.push_back("gha weight " + std::to_string(g.weight()) + " exceeds 3.5 * OPT = 3.5 * " +
                            std::to_string(brute->length));
    }
    result.outcomes.push_back(std::move(out));
  }
  if (checks.contains(Check::spectrum) && !inst.spectrum_source.empty()) {
    // Weight at most |s|; exactly n + k - 1 when the k-mers of s are
    // distinct; optimal whenever the optimum is known.
    CheckOutcome out{Check::spectrum, true, {}};
    const auto& source = inst.spectrum_source;
    const bool distinct = n == source.size() - inst.spectrum_k + 1;
    const auto expected = n + inst.spectrum_k - 1;
    const bool ok = g.weight() <= source.size() && (!distinct || g.weight() == expected) &&
                    (!brute || g.weight() == brute->length);
    if (!ok) {
      out.holds = false;
      out.details.push_back("source " + source + ", k=" + std::to_string(inst.spectrum_k) + ": gha weight " +
                            std::to_string(g.weight()) + ", n+k-1 = " + std::to_string(expected) +
                            (brute ? ", optimum " + std::to_string(brute->length) : std::string()));
    }
    result.outcomes.push_back(std::move(out));
  }
  if (checks.contains(Check::two_scs) && inputs.max_length() <= 2) {
    CheckOutcome out{Check::two_scs, true, {}};
    const auto formula = two_scs_formula(inputs);
    if (g.weight() != formula || (brute && brute->length != formula)) {
      out.holds = false;
      out.details.push_back("gha " + std::to_string(g.weight()) + ", formula " + std::to_string(formula) +
                            (brute ? ", brute " + std::to_string(brute->length) : std::string()));
    }
    result.outcomes.push_back(std::move(out));
  }
  if (checks.contains(Check::cycle_cover) && n <= options.cycle_cover_limit) {
    CheckOutcome out{Check::cycle_cover, true, {}};
    const auto cc = gha_cycle_cover(hg);
    const auto best = brute_optimal_cycle_cover(inputs, options.cycle_cover_limit);
    if (cc.weight() != best || !is_balanced(hg, cc) || !covers_inputs(hg, cc)) {
      out.holds = false;
      out.details.push_back("gha_cycle_cover weight " + std::to_string(cc.weight()) + ", brute-force optimum " +
                            std::to_string(best));
    }
    result.outcomes.push_back(std::move(out));
  }
  if (checks.contains(Check::properties)) {
    CheckOutcome out{Check::properties, true, {}};
    auto fail = [&](std::string why) {
      out.holds = false;
      out.details.push_back(std::move(why));
    };
    if (!is_eulerian_solution(hg, g)) fail("gha output is not an Eulerian solution");
    if (!is_normalized(hg, g)) fail("gha output admits a valid collapse");
    if (is_eulerian_solution(hg, g)) {
      const auto spelled = spell(hg, g);
      if (spelled.superstring.size() != g.weight()) fail("spelled length differs from gha weight");
      for (const auto& s : inputs) {
        if (spelled.superstring.find(s) == std::string::npos) fail("spelled gha string misses " + s);
      }
      if (permutation_length(inputs, spelled.visit_order) != g.weight()) {
        fail("gha visit order length differs from gha weight");
      }
    }
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const auto& r = doubled[i];
      if (r.weight() > 2 * starts[i].solution.weight()) fail("CA increased weight for " + starts[i].name);
      if (!is_eulerian_solution(hg, r)) fail("CA output invalid for " + starts[i].name);
      if (!is_normalized(hg, r)) fail("CA output not normalized for " + starts[i].name);
    }
    result.outcomes.push_back(std::move(out));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Campaigns

struct Failure {
  std::string generator;
  std::size_t instance_index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> instance;
  std::string check;
  std::vector<std::string> details;
};

struct FuzzReport {
  std::size_t instances_run = 0;
  /// Number of instances each check was applied to.
  std::map<std::string, std::size_t> checks_run;
  std::vector<Failure> failures;
  /// Largest weight(gha) / OPT over instances small enough for brute force.
  Ratio max_gha_ratio;
  std::size_t shortest_below_level = 0;

  bool holds() const noexcept { return failures.empty(); }

  /// Associative and commutative: failures are kept sorted by
  /// (generator, instance index, check).
  void merge(const FuzzReport& other) {
    instances_run += other.instances_run;
    for (const auto& [name, count] : other.checks_run) checks_run[name] += count;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
      return std::tie(a.generator, a.instance_index, a.check) < std::tie(b.generator, b.instance_index, b.check);
    });
    if (max_gha_ratio < other.max_gha_ratio) max_gha_ratio = other.max_gha_ratio;
    shortest_below_level += other.shortest_below_level;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["instances_run"] = instances_run;
    j["checks_run"] = checks_run;
    j["holds"] = holds();
    j["failure_count"] = failures.size();
    auto list = nlohmann::json::array();
    for (const auto& f : failures) {
      list.push_back({{"generator", f.generator},
                      {"instance_index", f.instance_index},
                      {"seed", f.seed},
                      {"instance", f.instance},
                      {"check", f.check},
                      {"details", f.details}});
    }
    j["failures"] = std::move(list);
    if (max_gha_ratio.defined()) {
      j["max_gha_ratio"] = {{"gha", max_gha_ratio.num}, {"opt", max_gha_ratio.den}, {"value", max_gha_ratio.value()}};
    } else {
      j["max_gha_ratio"] = nullptr;
    }
    j["gha_shortest_below_level"] = shortest_below_level;
    return j;
  }
};

/// Generates `count` instances from `spec` (instance i uses seed
/// derive_seed(seed, i)) and runs `checks` on each. Work is spread over
/// threads; the report does not depend on scheduling. Exceptions escaping
/// a check are recorded as failures of the pseudo-check "error".
inline FuzzReport run_campaign(const GeneratorSpec& spec, std::size_t count, std::uint64_t seed,
                               const CheckSet& checks, const CampaignOptions& options = {}) {
  spec.validate();
  const auto generator = spec.to_string();
  unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

  std::vector<FuzzReport> partial(workers);
  auto work = [&](unsigned w) {
    auto& report = partial[w];
    for (std::size_t i = w; i < count; i += workers) {
      const auto instance_seed = derive_seed(seed, i);
      Instance inst;
      try {
        inst = generate_instance(spec, instance_seed);
        const auto r = evaluate_instance(inst, checks, options);
        ++report.instances_run;
        if (report.max_gha_ratio < r.gha_ratio) report.max_gha_ratio = r.gha_ratio;
        report.shortest_below_level += r.shortest_below_level;
        for (const auto& o : r.outcomes) {
          ++report.checks_run[check_name(o.check)];
          if (!o.holds) {
            report.failures.push_back({generator, i, instance_seed, inst.inputs.strings(), check_name(o.check), o.details});
          }
        }
      } catch (const std::exception& e) {
        ++report.instances_run;
        report.failures.push_back({generator, i, instance_seed, inst.inputs.strings(), "error", {e.what()}});
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  FuzzReport total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

/// Regenerates a failure's instance from its generator and seed and reruns
/// the failing check.
inline InstanceResult replay(const Failure& failure, const CampaignOptions& options = {}) {
  const auto inst = generate_instance(GeneratorSpec::parse(failure.generator), failure.seed);
  return evaluate_instance(inst, CheckSet::parse(failure.check), options);
}

/// Writes each failure as a dataset file whose header comments record the
/// generator, seed, instance index, failing check and divergence. Returns
/// the written paths.
inline std::vector<std::filesystem::path> write_counterexamples(const FuzzReport& report,
                                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& f : report.failures) {
    auto kind = f.generator.substr(0, f.generator.find(':'));
    const auto path = dir / (f.check + "-" + kind + "-" + std::to_string(f.instance_index) + ".txt");
    std::ofstream out(path);
    if (!out) throw InputError("cannot write counterexample file: " + path.string());
    std::vector<std::string> header{"generator: " + f.generator, "seed: " + std::to_string(f.seed),
                                    "instance: " + std::to_string(f.instance_index), "check: " + f.check};
    for (const auto& d : f.details) header.push_back("detail: " + d);
    for (std::size_t i = 0; i < header.size(); ++i) out << "# " << header[i] << '\n';
    for (const auto& s : f.instance) out << s << '\n';
    written.push_back(path);
  }
  return written;
}

}  // namespace scs
