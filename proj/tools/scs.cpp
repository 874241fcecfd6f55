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

// scs: command-line front end.
//
// Exit status: 0 on success (or when a checked conjecture holds), 2 when a
// counterexample is found, 1 on usage or input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scs/scs.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCounterexample = 2;

std::vector<std::size_t> one_based(const scs::Permutation& p) {
  std::vector<std::size_t> out;
  for (auto i : p.order()) out.push_back(i + 1);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

scs::InputSet load(const std::string& path) {
  const auto raw = scs::read_dataset_lines(path);
  auto inputs = scs::reduce_substring_free(raw);
  if (inputs.size() != raw.size()) {
    std::cerr << "warning: " << raw.size() - inputs.size()
              << " duplicate or contained string(s) removed; indices refer to the reduced set\n";
  }
  return inputs;
}

scs::Permutation parse_perm(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 1 || value > n) {
      throw scs::InputError("perm: expected 1-based indices in [1, " + std::to_string(n) + "], got '" + item + "'");
    }
    order.push_back(value - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return scs::Permutation(std::move(order));
  } catch (const scs::Error& e) {
    throw scs::InputError(std::string("perm: ") + e.what());
  }
}

// naive | optimal | gha | gha-cc | perm:<i1,i2,...>
scs::ArcMultiset resolve_solution(const scs::HierarchicalGraph& hg, const std::string& source, std::size_t brute_limit) {
  const auto n = hg.inputs().size();
  if (source == "naive") return scs::zigzag(hg, scs::Permutation::identity(n));
  if (source == "gha") return scs::gha(hg);
  if (source == "gha-cc") return scs::gha_cycle_cover(hg);
  if (source == "optimal") {
    if (n > brute_limit) {
      std::cerr << "warning: " << n << " strings exceed the brute-force limit of " << brute_limit
                << "; using gha instead of optimal\n";
      return scs::gha(hg);
    }
    return scs::zigzag(hg, scs::brute_optimal(hg.inputs(), {.max_n = brute_limit}).order);
  }
  if (source.rfind("perm:", 0) == 0) return scs::zigzag(hg, parse_perm(source.substr(5), n));
  throw scs::InputError("unknown solution source: " + source);
}

void print_solution(const scs::HierarchicalGraph& hg, const scs::ArcMultiset& d, bool as_json) {
  const auto validity = scs::is_eulerian_solution(hg, d);
  json j;
  j["weight"] = d.weight();
  j["valid"] = validity.ok();
  j["arcs"] = scs::to_json(hg, d);
  if (validity) {
    const auto spelled = scs::spell(hg, d);
    j["superstring"] = spelled.superstring;
    j["length"] = spelled.superstring.size();
    j["permutation"] = one_based(spelled.visit_order);
  }
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "weight: " << d.weight() << '\n';
  if (validity) {
    std::cout << "superstring: " << j["superstring"].get<std::string>() << '\n';
    std::cout << "permutation: " << join(j["permutation"].get<std::vector<std::size_t>>()) << '\n';
  } else {
    std::cout << "not an Eulerian solution (balanced=" << validity.balanced << " connected=" << validity.connected
              << " covers_inputs=" << validity.covers_inputs << " touches_epsilon=" << validity.touches_epsilon
              << ")\n";
  }
  std::cout << "arcs: " << scs::canonical_string(hg, d) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest common superstring tools on the hierarchical graph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "scs 0.1.0");

  std::string dataset;
  bool as_json = false;
  std::size_t brute_limit = 9;

  auto* gha_cmd = app.add_subcommand("gha", "Greedy Hierarchical Algorithm");
  gha_cmd->add_option("dataset", dataset, "Dataset file")->required();
  gha_cmd->add_flag("--json", as_json, "JSON output");
  bool gha_stats = false;
  gha_cmd->add_flag("--stats", gha_stats, "Also report balancing and last-chance counts");

  auto* ga_cmd = app.add_subcommand("ga", "Classical greedy merging");
  ga_cmd->add_option("dataset", dataset, "Dataset file")->required();
  ga_cmd->add_flag("--json", as_json, "JSON output");
  std::string tie_break = "input-order";
  ga_cmd->add_option("--tie-break", tie_break, "input-order | lexicographic-pair | seeded-random[:<seed>]")
      ->capture_default_str();

  auto* collapse_cmd = app.add_subcommand("collapse", "Run the collapsing algorithm on a start solution");
  collapse_cmd->add_option("dataset", dataset, "Dataset file")->required();
  collapse_cmd->add_flag("--json", as_json, "JSON output");
  std::string start = "naive";
  collapse_cmd->add_option("--start", start, "naive | optimal | gha | perm:<i1,i2,...> (1-based)")
      ->capture_default_str();
  bool doubled = false;
  bool add_cover = false;
  bool trace = false;
  bool fixed_point = false;
  collapse_cmd->add_flag("--double", doubled, "Collapse the start united with itself");
  collapse_cmd->add_flag("--add-cycle-cover", add_cover, "Unite the start with the GHA cycle cover");
  collapse_cmd->add_flag("--trace", trace, "Print every collapse step");
  collapse_cmd->add_flag("--fixed-point", fixed_point, "Repeat passes until nothing collapses");
  collapse_cmd->add_option("--brute-limit", brute_limit, "Largest n for --start=optimal")->capture_default_str();

  auto* brute_cmd = app.add_subcommand("brute", "Exact optimum over all permutations");
  brute_cmd->add_option("dataset", dataset, "Dataset file")->required();
  brute_cmd->add_flag("--json", as_json, "JSON output");
  brute_cmd->add_option("--max-n", brute_limit, "Refuse larger instances")->capture_default_str();

  auto* brute_cc_cmd = app.add_subcommand("brute-cc", "Exact minimum cycle cover");
  brute_cc_cmd->add_option("dataset", dataset, "Dataset file")->required();
  brute_cc_cmd->add_flag("--json", as_json, "JSON output");
  std::size_t cc_limit = 8;
  brute_cc_cmd->add_option("--max-n", cc_limit, "Refuse larger instances")->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Check a conjecture on one dataset");
  check_cmd->add_option("dataset", dataset, "Dataset file")->required();
  check_cmd->add_flag("--json", as_json, "JSON output");
  std::string conjecture = "gh";
  check_cmd->add_option("--conjecture", conjecture, "collapsing | gh | strong")
      ->check(CLI::IsMember({"collapsing", "gh", "greedy_hierarchical", "strong"}))
      ->capture_default_str();
  std::uint64_t check_seed = 1;
  check_cmd->add_option("--seed", check_seed, "Seed for random starts and covers")->capture_default_str();
  scs::CampaignOptions check_options;
  check_cmd->add_option("--random-starts", check_options.random_starts, "Random-permutation starts")
      ->capture_default_str();
  check_cmd->add_option("--random-solutions", check_options.random_solutions, "General random starts")
      ->capture_default_str();
  check_cmd->add_option("--random-covers", check_options.random_covers, "Random cycle covers (strong)")
      ->capture_default_str();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run a randomized conjecture campaign");
  std::vector<std::string> generators;
  fuzz_cmd->add_option("--gen", generators, "Generator spec, repeatable (e.g. uniform:n=6,min=1,max=5,alpha=3)")
      ->required();
  std::size_t count = 1000;
  fuzz_cmd->add_option("--count", count, "Instances per generator")->capture_default_str();
  std::uint64_t seed = 1;
  fuzz_cmd->add_option("--seed", seed, "Campaign seed")->capture_default_str();
  std::string checks = "collapsing,gh,strong";
  fuzz_cmd->add_option("--checks", checks, "Comma-separated checks or 'all'")->capture_default_str();
  std::string out_dir;
  fuzz_cmd->add_option("--out", out_dir, "Directory for counterexample files");
  scs::CampaignOptions fuzz_options;
  fuzz_cmd->add_option("--threads", fuzz_options.threads, "Worker threads (0 = all cores)")->capture_default_str();
  fuzz_cmd->add_option("--brute-limit", fuzz_options.brute_limit, "Largest n for brute-force oracles")
      ->capture_default_str();
  fuzz_cmd->add_flag("--fixed-point", fuzz_options.collapse.fixed_point, "Collapse until nothing changes");
  fuzz_cmd->add_flag("--json", as_json, "Print the full report as JSON");

  auto* dot_cmd = app.add_subcommand("dot", "Render the hierarchical graph as Graphviz DOT");
  dot_cmd->add_option("dataset", dataset, "Dataset file")->required();
  std::string solution;
  dot_cmd->add_option("--solution", solution, "Overlay: naive | optimal | gha | gha-cc | perm:<i1,i2,...>");
  bool stages = false;
  dot_cmd->add_flag("--stages", stages, "One graph per GHA level (with --solution=gha)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gha_cmd) {
      const scs::HierarchicalGraph hg(load(dataset));
      scs::GhaStats stats;
      const auto d = scs::gha(hg, &stats);
      const auto spelled = scs::spell(hg, d);
      if (as_json) {
        json j{{"superstring", spelled.superstring},
               {"length", spelled.superstring.size()},
               {"permutation", one_based(spelled.visit_order)},
               {"arcs", scs::to_json(hg, d)}};
        if (gha_stats) {
          j["stats"] = {{"balancing_arcs", stats.balancing_arcs},
                        {"last_chance_pairs", stats.last_chance_pairs},
                        {"shortest_below_level", stats.shortest_below_level}};
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "length: " << spelled.superstring.size() << '\n'
                  << "superstring: " << spelled.superstring << '\n'
                  << "permutation: " << join(one_based(spelled.visit_order)) << '\n';
        if (gha_stats) {
          std::cout << "balancing_arcs: " << stats.balancing_arcs << '\n'
                    << "last_chance_pairs: " << stats.last_chance_pairs << '\n'
                    << "shortest_below_level: " << stats.shortest_below_level << '\n';
        }
      }
    } else if (*ga_cmd) {
      const auto inputs = load(dataset);
      const auto policy = scs::TieBreakPolicy::parse(tie_break);
      const auto r = scs::ga(inputs, policy);
      if (as_json) {
        std::cout << json{{"superstring", r.superstring},
                          {"length", r.superstring.size()},
                          {"permutation", one_based(r.order)},
                          {"tie_break", policy.to_string()}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "length: " << r.superstring.size() << '\n'
                  << "superstring: " << r.superstring << '\n'
                  << "permutation: " << join(one_based(r.order)) << '\n';
      }
    } else if (*collapse_cmd) {
      const scs::HierarchicalGraph hg(load(dataset));
      auto d = resolve_solution(hg, start, brute_limit);
      const auto base = d;
      if (doubled) d += base;
      if (add_cover) d += scs::gha_cycle_cover(hg);
      std::vector<scs::CollapseStep> steps;
      const scs::CollapseOptions options{.fixed_point = fixed_point, .full_probe = false};
      const auto result = scs::ca(hg, d, options, trace ? &steps : nullptr);
      if (trace && !as_json) {
        for (const auto& s : steps) {
          std::cout << "collapse level " << s.level << " at " << hg.label(s.vertex) << " (up " << s.up_after
                    << ", down " << s.down_after << " left)\n";
        }
      }
      if (as_json) {
        const auto spelled = scs::spell(hg, result);
        json j{{"start", start},
               {"input_weight", d.weight()},
               {"weight", result.weight()},
               {"superstring", spelled.superstring},
               {"length", spelled.superstring.size()},
               {"permutation", one_based(spelled.visit_order)},
               {"arcs", scs::to_json(hg, result)}};
        if (trace) {
          auto list = json::array();
          for (const auto& s : steps) {
            list.push_back({{"level", s.level}, {"vertex", hg.label(s.vertex)}, {"up", s.up_after}, {"down", s.down_after}});
          }
          j["trace"] = std::move(list);
        }
        std::cout << j.dump(2) << '\n';
      } else {
        print_solution(hg, result, false);
      }
    } else if (*brute_cmd) {
      const auto inputs = load(dataset);
      const auto r = scs::brute_optimal(inputs, {.max_n = brute_limit});
      const auto s = scs::permutation_superstring(inputs, r.order);
      if (as_json) {
        std::cout << json{{"length", r.length}, {"superstring", s}, {"permutation", one_based(r.order)}}.dump(2)
                  << '\n';
      } else {
        std::cout << "length: " << r.length << '\n'
                  << "superstring: " << s << '\n'
                  << "permutation: " << join(one_based(r.order)) << '\n';
      }
    } else if (*brute_cc_cmd) {
      const auto inputs = load(dataset);
      const auto best = scs::brute_optimal_cycle_cover(inputs, cc_limit);
      if (as_json) {
        std::cout << json{{"cycle_cover_length", best}}.dump(2) << '\n';
      } else {
        std::cout << "cycle_cover_length: " << best << '\n';
      }
    } else if (*check_cmd) {
      const scs::HierarchicalGraph hg(load(dataset));
      scs::SplitMix64 rng(check_seed);
      check_options.brute_limit = std::min<std::size_t>(check_options.brute_limit, brute_limit);
      const auto starts = scs::default_starts(hg, rng, check_options);
      scs::CheckOutcome outcome;
      if (conjecture == "collapsing") {
        outcome = scs::check_collapsing(hg, starts);
      } else if (conjecture == "strong") {
        const auto& d = starts.front().solution;
        outcome = scs::check_strong_collapsing(hg, d, scs::default_covers(hg, d, rng, check_options.random_covers));
      } else {
        outcome = scs::check_greedy_hierarchical(hg, starts);
      }
      if (as_json) {
        std::cout << json{{"conjecture", conjecture}, {"holds", outcome.holds}, {"details", outcome.details}}.dump(2)
                  << '\n';
      } else {
        std::cout << conjecture << ": " << (outcome.holds ? "holds" : "counterexample") << '\n';
        for (const auto& line : outcome.details) std::cout << "  " << line << '\n';
      }
      return outcome.holds ? kOk : kCounterexample;
    } else if (*fuzz_cmd) {
      const auto check_set = scs::CheckSet::parse(checks);
      if (check_set.empty()) throw scs::InputError("no checks selected");
      scs::FuzzReport total;
      std::vector<std::string> canonical;
      for (const auto& g : generators) {
        const auto spec = scs::GeneratorSpec::parse(g);
        canonical.push_back(spec.to_string());
        total.merge(scs::run_campaign(spec, count, seed, check_set, fuzz_options));
      }
      std::vector<std::filesystem::path> written;
      if (!out_dir.empty()) written = scs::write_counterexamples(total, out_dir);
      if (as_json) {
        auto j = total.to_json();
        j["generators"] = canonical;
        j["seed"] = seed;
        j["count_per_generator"] = count;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "instances: " << total.instances_run << '\n';
        for (const auto& [name, n] : total.checks_run) std::cout << "check " << name << ": " << n << '\n';
        std::cout << "failures: " << total.failures.size() << '\n';
        if (total.max_gha_ratio.defined()) {
          std::cout << "max gha/opt: " << total.max_gha_ratio.num << "/" << total.max_gha_ratio.den << '\n';
        }
        std::cout << "gha shortest_below_level events: " << total.shortest_below_level << '\n';
        for (const auto& f : total.failures) {
          std::cout << "FAIL " << f.check << " " << f.generator << " #" << f.instance_index << " seed " << f.seed
                    << ':';
          for (const auto& s : f.instance) std::cout << ' ' << s;
          std::cout << '\n';
        }
      }
      for (const auto& p : written) std::cerr << "wrote " << p.string() << '\n';
      return total.holds() ? kOk : kCounterexample;
    } else if (*dot_cmd) {
      const scs::HierarchicalGraph hg(load(dataset));
      if (stages) {
        if (solution != "gha") throw scs::InputError("--stages requires --solution=gha");
        std::vector<scs::GhaSnapshot> snapshots;
        scs::greedy_hierarchical(hg, {}, nullptr, &snapshots);
        for (const auto& s : snapshots) {
          std::cout << scs::to_dot(hg, &s.solution, "GHA_level_" + std::to_string(s.level));
        }
      } else if (solution.empty()) {
        std::cout << scs::to_dot(hg);
      } else {
        const auto d = resolve_solution(hg, solution, brute_limit);
        std::cout << scs::to_dot(hg, &d);
      }
    }
  } catch (const scs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
