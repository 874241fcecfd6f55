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

#include <gtest/gtest.h>

#include "helpers.hpp"

namespace {

using scs::InputSet;
using scs::Permutation;
using scs_test::set_of;

TEST(Overlap, Examples) {
  EXPECT_EQ(scs::overlap("baacabbcaacb", "bcaacbacaaabca"), "bcaacb");
  EXPECT_EQ(scs::overlap("ab", "cd"), "");
  EXPECT_EQ(scs::overlap("ccaeae", "aeaecc"), "aeae");
  EXPECT_EQ(scs::overlap("abc", "abc"), "abc");
  EXPECT_EQ(scs::overlap("", "abc"), "");
  EXPECT_EQ(scs::overlap("aaaa", "aa"), "aa");
}

TEST(Overlap, MatchesNaiveOnAllShortBinaryPairs) {
  std::vector<std::string> all{""};
  for (std::size_t len = 1; len <= 7; ++len) {
    for (std::size_t bits = 0; bits < (1U << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += (bits >> i & 1U) ? 'b' : 'a';
      all.push_back(s);
    }
  }
  for (const auto& s : all) {
    for (const auto& t : all) {
      ASSERT_EQ(scs::overlap_length(s, t), scs_ref::overlap(s, t)) << s << " / " << t;
    }
  }
}

TEST(Overlap, RandomPropertiesUpToLength12) {
  scs::SplitMix64 rng(11);
  for (int it = 0; it < 5000; ++it) {
    const auto s = scs::random_string(rng, rng.between(0, 12), 3);
    const auto t = scs::random_string(rng, rng.between(0, 12), 3);
    const auto o = scs::overlap(s, t);
    ASSERT_EQ(o.size(), scs_ref::overlap(s, t));
    EXPECT_EQ(scs::pref_pair(s, t) + o, s);
    EXPECT_EQ(o + scs::suff_pair(s, t), t);
    EXPECT_EQ(scs::merge(s, t).size(), s.size() + t.size() - o.size());
  }
}

TEST(Overlap, SelfOverlapIsProper) {
  EXPECT_EQ(scs::self_overlap_length("abc"), 0U);
  EXPECT_EQ(scs::self_overlap_length("abab"), 2U);
  EXPECT_EQ(scs::self_overlap_length("aaa"), 2U);
  EXPECT_EQ(scs::self_overlap_length("a"), 0U);
}

TEST(PrefSuff, Examples) {
  EXPECT_EQ(scs::pref_pair("baacabbcaacb", "bcaacbacaaabca"), "baacab");
  EXPECT_EQ(scs::suff_pair("baacabbcaacb", "bcaacbacaaabca"), "acaaabca");
  EXPECT_EQ(scs::pref_pair("ab", "ab"), "");
  EXPECT_EQ(scs::pref1("abac"), "aba");
  EXPECT_EQ(scs::suff1("abac"), "bac");
  EXPECT_EQ(scs::pref1("a"), "");
  EXPECT_EQ(scs::suff1("a"), "");
  EXPECT_THROW(scs::pref1(""), scs::PreconditionError);
  EXPECT_THROW(scs::suff1(""), scs::PreconditionError);
}

TEST(Merge, Examples) {
  EXPECT_EQ(scs::merge("ccaeae", "aeaecc"), "ccaeaecc");
  EXPECT_EQ(scs::merge("ab", "cd"), "abcd");
  EXPECT_EQ(scs::merge(scs::merge("ca", "aa"), "ae"), "caae");
}

TEST(InputSetTest, RejectsInvalidSets) {
  EXPECT_THROW(InputSet(std::vector<std::string>{}), scs::PreconditionError);
  EXPECT_THROW(set_of({"ab", ""}), scs::PreconditionError);
  EXPECT_THROW(set_of({"ab", "ab"}), scs::PreconditionError);
  EXPECT_THROW(set_of({"ab", "abc"}), scs::PreconditionError);
  EXPECT_NO_THROW(set_of({"ab", "ba"}));
}

TEST(InputSetTest, AlphabetAndLengths) {
  const auto s = scs_test::fig3();
  EXPECT_EQ(s.alphabet(), "ace");
  EXPECT_EQ(s.total_length(), 12U);
  EXPECT_EQ(s.max_length(), 3U);
  EXPECT_EQ(s.size(), 4U);
  EXPECT_EQ(s[2], "aec");
}

TEST(Reduce, Examples) {
  EXPECT_EQ(scs::reduce_substring_free({"ab", "abc", "abc"}).strings(), std::vector<std::string>{"abc"});
  EXPECT_EQ(scs::reduce_substring_free({"aaa", "cae", "aec", "eee"}).strings(),
            (std::vector<std::string>{"aaa", "cae", "aec", "eee"}));
  EXPECT_EQ(scs::reduce_substring_free({"a", "ba"}).strings(), std::vector<std::string>{"ba"});
  EXPECT_THROW(scs::reduce_substring_free({}), scs::PreconditionError);
}

TEST(Reduce, IdempotentAndSubstringFree) {
  scs::SplitMix64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    std::vector<std::string> raw;
    const auto n = rng.between(1, 8);
    for (std::uint64_t i = 0; i < n; ++i) raw.push_back(scs::random_string(rng, rng.between(1, 5), 2));
    const auto once = scs::reduce_substring_free(raw);
    EXPECT_TRUE(scs_ref::is_substring_free(once.strings()));
    EXPECT_EQ(scs::reduce_substring_free(once.strings()), once);
    for (const auto& r : raw) {
      EXPECT_TRUE(std::any_of(once.begin(), once.end(), [&](const std::string& s) { return s.find(r) != std::string::npos; }));
    }
  }
}

TEST(PermutationTest, Validation) {
  EXPECT_THROW(Permutation({0, 0}), scs::PreconditionError);
  EXPECT_THROW(Permutation({1, 2}), scs::PreconditionError);
  EXPECT_EQ(Permutation::identity(3).order(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(PermutationLength, Examples) {
  EXPECT_EQ(scs::permutation_length(scs_test::fig3(), Permutation({0, 2, 1, 3})), 9U);
  EXPECT_EQ(scs::permutation_superstring(scs_test::fig3(), Permutation({0, 2, 1, 3})), "aaaecaeee");
  const auto t = scs::tough(2);
  EXPECT_EQ(scs::permutation_length(t, Permutation({0, 1, 2})), 12U);
  EXPECT_EQ(scs::permutation_length(t, Permutation({0, 2, 1})), 14U);
  EXPECT_THROW(scs::permutation_length(t, Permutation({0, 1})), scs::PreconditionError);
}

TEST(PermutationLength, AgreesWithFoldMerge) {
  scs::SplitMix64 rng(9);
  for (int it = 0; it < 1000; ++it) {
    const auto s = scs_test::random_inputs(rng, 6, 6, 3);
    const auto p = scs::random_permutation(s.size(), rng);
    const auto super = scs::permutation_superstring(s, p);
    EXPECT_EQ(super, scs_ref::fold_merge(s.strings(), p.order()));
    EXPECT_EQ(super.size(), scs::permutation_length(s, p));
  }
}

TEST(Dataset, ParsesCommentsAndBlankLines) {
  const auto lines = scs::parse_dataset("# header\n\n  aaa \ncae\r\n#x\naec\n");
  EXPECT_EQ(lines, (std::vector<std::string>{"aaa", "cae", "aec"}));
  EXPECT_THROW(scs::parse_dataset("a b\n"), scs::InputError);
}

TEST(Dataset, RoundTrip) {
  std::ostringstream out;
  scs::write_dataset(out, scs_test::fig3(), {"generator: test", "seed: 1"});
  EXPECT_EQ(out.str(), "# generator: test\n# seed: 1\naaa\ncae\naec\neee\n");
  EXPECT_EQ(scs::reduce_substring_free(scs::parse_dataset(out.str())), scs_test::fig3());
}

TEST(Dataset, MissingFile) { EXPECT_THROW(scs::read_dataset_file("/nonexistent/file.txt"), scs::InputError); }

}  // namespace
