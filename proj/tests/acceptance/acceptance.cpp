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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails. Counterexamples found by the campaign
// criteria are written under ./counterexamples/.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reference.hpp"
#include "scs/scs.hpp"

namespace {

using scs::CheckSet;
using scs::GeneratorSpec;
using scs::HierarchicalGraph;
using scs::Permutation;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " MISMATCH: " << what << ";";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Verdict&)> body;
};

const std::string kCounterexampleDir = "counterexamples";

// Runs every generator for `count` instances and folds the reports.
scs::FuzzReport campaign(const std::vector<std::string>& generators, std::size_t count, std::uint64_t seed,
                         const CheckSet& checks, const scs::CampaignOptions& options = {}) {
  scs::FuzzReport total;
  for (const auto& g : generators) total.merge(scs::run_campaign(GeneratorSpec::parse(g), count, seed, checks, options));
  if (!total.holds()) scs::write_counterexamples(total, kCounterexampleDir);
  return total;
}

void report_campaign(Verdict& v, const scs::FuzzReport& r, const std::string& check, std::size_t minimum) {
  const auto it = r.checks_run.find(check);
  const auto ran = it == r.checks_run.end() ? 0 : it->second;
  v.detail << " " << check << " on " << ran << " instances;";
  v.require(ran >= minimum, check + " ran on fewer than " + std::to_string(minimum) + " instances");
  std::size_t failures = 0;
  for (const auto& f : r.failures) failures += f.check == check || f.check == "error";
  v.require(failures == 0, std::to_string(failures) + " " + check + " counterexample(s) written to " +
                               kCounterexampleDir + "/");
}

void worked_example(Verdict& v) {
  const scs::InputSet s(std::vector<std::string>{"aaa", "cae", "aec", "eee"});
  const HierarchicalGraph hg(s);
  const auto brute = scs::brute_optimal(s);
  const auto super = scs::permutation_superstring(s, brute.order);
  v.require(brute.length == 9, "brute length " + std::to_string(brute.length));
  v.require(super == "aaaecaeee", "brute superstring " + super);
  const auto g = scs::gha(hg);
  v.require(g.weight() == 10, "gha weight " + std::to_string(g.weight()));
  const auto opt = scs::zigzag(hg, brute.order);
  const auto naive = scs::zigzag(hg, Permutation::identity(s.size()));
  const auto a = scs::canonical_string(hg, scs::ca(hg, scs::disjoint_union(opt, opt)));
  const auto b = scs::canonical_string(hg, scs::ca(hg, scs::disjoint_union(naive, naive)));
  v.require(a == b && b == scs::canonical_string(hg, g), "collapsed starts differ from gha");
  v.detail << " brute 9 \"" << super << "\", gha 10, ca(opt+opt) = ca(naive+naive) = gha;";
}

void normalization_example(Verdict& v) {
  const scs::InputSet s(std::vector<std::string>{"ae", "aa", "ca"});
  const HierarchicalGraph hg(s);
  const auto r = scs::ca(hg, scs::zigzag(hg, Permutation::identity(3)));
  const auto spelled = scs::spell(hg, r).superstring;
  v.require(spelled == "caae", "spelled " + spelled);
  v.require(r.weight() == 4, "weight " + std::to_string(r.weight()));
  v.detail << " ca(zigzag(ae,aa,ca)) spells \"" << spelled << "\", weight " << r.weight() << ";";
}

void tough_dataset(Verdict& v) {
  const std::vector<scs::TieBreakPolicy> policies{scs::TieBreakPolicy::input_order(),
                                                  scs::TieBreakPolicy::lexicographic_pair(),
                                                  scs::TieBreakPolicy::seeded_random(1),
                                                  scs::TieBreakPolicy::seeded_random(2)};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = scs::tough(n);
    const auto opt = scs::brute_optimal(t);
    v.require(opt.length == 2 * n + 8, "n=" + std::to_string(n) + ": brute_optimal = " + std::to_string(opt.length) +
                                           " (order " + std::to_string(opt.order[0] + 1) + "," +
                                           std::to_string(opt.order[1] + 1) + "," + std::to_string(opt.order[2] + 1) +
                                           "), expected 2n+8 = " + std::to_string(2 * n + 8));
    for (const auto& p : policies) {
      const auto len = scs::ga(t, p).superstring.size();
      v.require(len == 4 * n + 6, "n=" + std::to_string(n) + ": ga " + p.to_string() + " = " + std::to_string(len));
    }
  }
  for (std::size_t n : {10, 25, 50}) {
    const auto t = scs::tough(n);
    const HierarchicalGraph hg(t);
    const auto g = scs::gha(hg);
    const auto spelled = scs::spell(hg, g).superstring.size();
    v.require(g.weight() == 4 * n + 6 && spelled == g.weight(),
              "n=" + std::to_string(n) + ": gha " + std::to_string(g.weight()) + ", spelled " + std::to_string(spelled));
    if (n == 50) {
      const auto opt = scs::brute_optimal(t).length;
      const double ratio = static_cast<double>(g.weight()) / static_cast<double>(opt);
      v.require(ratio >= 1.9, "ratio " + std::to_string(ratio));
      v.detail << " n=50: gha " << g.weight() << " / OPT " << opt << " = " << ratio << ";";
    }
  }
  v.detail << " checked brute = 2n+8 and ga = 4n+6 (4 policies) for n=1..6, gha = |spell| = 4n+6 for n=10,25,50;";
}

void length_three(Verdict& v) {
  const auto r = campaign({"short:n=6,max=3,alpha=2", "short:n=6,max=3,alpha=3"}, 6000, 4,
                          CheckSet::parse("gh,pairs,strong"));
  report_campaign(v, r, "gh", 10000);
  report_campaign(v, r, "pairs", 10000);
  report_campaign(v, r, "strong", 10000);
}

void two_scs(Verdict& v) {
  const auto r = campaign({"short:n=7,max=2,alpha=2", "short:n=7,max=2,alpha=3", "short:n=7,max=2,alpha=4",
                           "short:n=7,max=2,alpha=5"},
                          2600, 5, CheckSet::parse("two_scs"));
  report_campaign(v, r, "two_scs", 10000);
}

void spectrum(Verdict& v) {
  // Literal criterion: weight(gha) = n + k - 1 <= |s| for every instance.
  // Mismatches are classified: whether s repeats a k-mer, and whether the
  // optimum (when brute-forceable) already exceeds n + k - 1.
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t mismatches_repeated = 0;
  std::size_t mismatches_opt_above = 0;
  std::size_t mismatches_gha_optimal = 0;
  std::size_t mismatches_brute_known = 0;
  std::size_t over_length = 0;
  for (std::size_t k : {2, 3, 4, 6}) {
    for (std::size_t alpha : {2, 4}) {
      const auto spec = GeneratorSpec::spectrum(30, k, alpha);
      for (std::size_t i = 0; i < 150; ++i) {
        const auto inst = scs::generate_instance(spec, scs::derive_seed(6, i));
        const auto n = inst.inputs.size();
        const auto w = scs::gha(HierarchicalGraph(inst.inputs)).weight();
        ++instances;
        over_length += w > inst.spectrum_source.size();
        if (w == n + k - 1 && w <= inst.spectrum_source.size()) continue;
        ++mismatches;
        mismatches_repeated += n < inst.spectrum_source.size() - k + 1;
        if (n <= 8) {
          const auto opt = scs::brute_optimal(inst.inputs).length;
          ++mismatches_brute_known;
          mismatches_opt_above += opt > n + k - 1;
          mismatches_gha_optimal += opt == w;
        }
      }
    }
  }
  v.detail << " " << instances << " instances;";
  v.require(instances >= 1000, "fewer than 1000 instances");
  v.require(over_length == 0, std::to_string(over_length) + " instances with weight > |s|");
  v.require(mismatches == 0, std::to_string(mismatches) + " instances with weight != n+k-1 (" +
                                 std::to_string(mismatches_repeated) + " of them from strings with a repeated k-mer; " +
                                 std::to_string(mismatches_opt_above) + "/" + std::to_string(mismatches_brute_known) +
                                 " brute-forced have optimum > n+k-1, and gha equals the optimum in " +
                                 std::to_string(mismatches_gha_optimal) + "/" + std::to_string(mismatches_brute_known) +
                                 ")");
}

void gha_is_greedy(Verdict& v) {
  const auto r = campaign({"uniform:n=7,min=1,max=6,alpha=2", "uniform:n=7,min=2,max=8,alpha=3",
                           "uniform:n=12,min=2,max=10,alpha=4", "short:n=7,max=3,alpha=2"},
                          2600, 7, CheckSet::parse("gha_greedy"));
  report_campaign(v, r, "gha_greedy", 10000);
  if (r.max_gha_ratio.defined()) {
    v.detail << " max gha/OPT " << r.max_gha_ratio.num << "/" << r.max_gha_ratio.den << ";";
  }
}

void conjecture_campaign(Verdict& v) {
  const auto r = campaign({"uniform:n=6,min=1,max=5,alpha=2", "uniform:n=6,min=1,max=5,alpha=3",
                           "uniform:n=8,min=2,max=8,alpha=2", "uniform:n=10,min=3,max=10,alpha=4",
                           "short:n=6,max=3,alpha=3", "spectrum:len=20,k=4,alpha=2", "spectrum:len=30,k=3,alpha=3",
                           "tough:n=8"},
                          25000, 8, CheckSet::parse("collapsing,gh,strong"));
  v.detail << " " << r.instances_run << " instances;";
  report_campaign(v, r, "collapsing", 100000);
  report_campaign(v, r, "gh", 100000);
  report_campaign(v, r, "strong", 100000);
  v.detail << " gha shortest-below-level events " << r.shortest_below_level << ";";
}

void cycle_cover(Verdict& v) {
  const auto r = campaign({"uniform:n=7,min=1,max=6,alpha=2", "uniform:n=7,min=2,max=6,alpha=3",
                           "short:n=7,max=3,alpha=3"},
                          400, 9, CheckSet::parse("cycle_cover"));
  report_campaign(v, r, "cycle_cover", 1000);
}

void properties(Verdict& v) {
  const auto r = campaign({"uniform:n=6,min=1,max=6,alpha=2", "uniform:n=8,min=2,max=8,alpha=3",
                           "spectrum:len=20,k=3,alpha=2", "short:n=6,max=3,alpha=3"},
                          1000, 10, CheckSet::parse("properties"));
  report_campaign(v, r, "properties", 4000);

  // zigzag weight = permutation_length, every permutation for n <= 5.
  scs::SplitMix64 rng(10);
  std::size_t perms = 0;
  std::size_t bad = 0;
  for (int it = 0; it < 600; ++it) {
    const auto inst = scs::generate_instance(GeneratorSpec::parse("uniform:n=5,min=1,max=6,alpha=2"), rng());
    const HierarchicalGraph hg(inst.inputs);
    std::vector<std::size_t> order(inst.inputs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      const Permutation p(order);
      const auto d = scs::zigzag(hg, p);
      const auto spelled = scs::spell(hg, d).superstring;
      bad += d.weight() != scs::permutation_length(inst.inputs, p) || spelled.size() != d.weight() ||
             spelled.size() != scs_ref::fold_merge(inst.inputs.strings(), order).size();
      for (const auto& str : inst.inputs) bad += spelled.find(str) == std::string::npos;
      ++perms;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  v.require(bad == 0, std::to_string(bad) + " zigzag/permutation_length/spell mismatches");
  v.detail << " zigzag weight = permutation_length = |spell| over all " << perms
           << " permutations of 600 instances with n <= 5;";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example", 1, worked_example},
      {2, "normalization example", 1, normalization_example},
      {3, "tough dataset", 5, tough_dataset},
      {4, "length <= 3 collapsing theorem", 300, length_three},
      {5, "2-SCS optimality", 120, two_scs},
      {6, "spectrum optimality", 60, spectrum},
      {7, "GHA is greedy", 300, gha_is_greedy},
      {8, "conjecture campaign", 1800, conjecture_campaign},
      {9, "cycle-cover optimality", 120, cycle_cover},
      {10, "property suite", 120, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what() << ";";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.detail << " over the " << c.limit_seconds << " s limit;";
    }
    failed += !v.pass;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f s", seconds);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << time_buf << "):" << v.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
