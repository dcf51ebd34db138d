// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cayley/galois.hpp"

#include <algorithm>
#include <vector>

#include "cayley/group.hpp"
#include "gtest/gtest.h"
#include "test_corpus.hpp"

namespace cayley {
namespace {

using Residues = std::vector<std::uint64_t>;

std::vector<std::uint32_t> classes_from_mask(std::uint64_t mask, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < k; ++j)
    if (mask >> j & 1) out.push_back(j);
  return out;
}

TEST(UnitGroupTest, Examples) {
  EXPECT_EQ(unit_group(1).elements, Residues{1});
  EXPECT_EQ(unit_group(5).elements, (Residues{1, 2, 3, 4}));
  EXPECT_EQ(unit_group(12).elements, (Residues{1, 5, 7, 11}));
  EXPECT_THROW(unit_group(0), InputError);
}

TEST(SubgroupClosureTest, Examples) {
  EXPECT_EQ(subgroup_closure(8, {3, 5}).elements, (Residues{1, 3, 5, 7}));
  EXPECT_EQ(subgroup_closure(7, {3}).elements, (Residues{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(subgroup_closure(7, {2}).elements, (Residues{1, 2, 4}));
  EXPECT_EQ(subgroup_closure(12, {-1}).elements, (Residues{1, 11}));
  EXPECT_EQ(trivial_subgroup(9).elements, Residues{1});
  EXPECT_THROW(subgroup_closure(12, {2}), InputError);
  EXPECT_TRUE(subgroup_closure(7, {2}).contains(9));
  EXPECT_FALSE(subgroup_closure(7, {2}).contains(3));
}

TEST(SubgroupEnumerationTest, Counts) {
  // (Z/8)^* = C2 x C2 has five subgroups, (Z/7)^* = C6 has four.
  EXPECT_EQ(all_subgroups(8).size(), 5u);
  EXPECT_EQ(cyclic_subgroups(8).size(), 4u);
  EXPECT_EQ(all_subgroups(7).size(), 4u);
  EXPECT_EQ(all_subgroups(1).size(), 1u);
  for (std::uint64_t m = 1; m <= 40; ++m) {
    const auto subs = all_subgroups(m);
    EXPECT_EQ(subs.front(), trivial_subgroup(m));
    EXPECT_EQ(subs.back(), unit_group(m));
    for (const auto& h : subs) {
      EXPECT_EQ(unit_group(m).order() % h.order(), 0u);
      for (const auto& k : subs) {
        const auto j = join(h, k);
        EXPECT_NE(std::find(subs.begin(), subs.end(), j), subs.end());
      }
    }
  }
}

TEST(GammaClassesTest, CyclicFive) {
  const Group g = build_group(GroupSpec::named("cyclic", {5}));
  const ClassData cd = conjugacy_classes(g);

  const auto rational = gamma_conjugacy_classes(g, cd, unit_group(5));
  EXPECT_EQ(rational.class_groups.size(), 2u);

  const auto real = gamma_conjugacy_classes(g, cd, subgroup_closure(5, {4}));
  ASSERT_EQ(real.class_groups.size(), 3u);
  const Element s = power_of(1, 1, g), s4 = power_of(1, 4, g), s2 = power_of(1, 2, g);
  EXPECT_EQ(real.class_of[s], real.class_of[s4]);
  EXPECT_NE(real.class_of[s], real.class_of[s2]);

  const auto split = gamma_conjugacy_classes(g, cd, trivial_subgroup(5));
  EXPECT_EQ(split.class_groups.size(), 5u);
  EXPECT_THROW(gamma_conjugacy_classes(g, cd, unit_group(10)), InputError);
}

TEST(PowerClosedTest, Examples) {
  const Group g = build_group(GroupSpec::named("cyclic", {12}));
  const Element s2 = power_of(1, 2, g), s10 = power_of(1, 10, g), s4 = power_of(1, 4, g);
  const std::vector<Element> just_s2{s2};
  EXPECT_FALSE(is_power_closed(just_s2, g));
  std::vector<Element> expected{s2, s10};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(power_closure(just_s2, g), expected);
  EXPECT_TRUE(is_power_closed(expected, g));
  const std::vector<Element> s4_only{s4};
  EXPECT_FALSE(is_power_closed(s4_only, g));
  const std::vector<Element> empty;
  EXPECT_TRUE(is_power_closed(empty, g));
  const std::vector<Element> identity{Group::identity};
  EXPECT_TRUE(is_power_closed(identity, g));
}

TEST(PowerClosedTest, SymmetricThreeClassesAreRational) {
  const Group g = build_group(GroupSpec::named("symmetric", {3}));
  const ClassData cd = conjugacy_classes(g);
  for (std::uint64_t mask = 0; mask < (1u << cd.count()); ++mask) {
    const auto cls = classes_from_mask(mask, cd.count());
    EXPECT_TRUE(is_power_closed(elements_of_classes(cd, cls), g));
    EXPECT_TRUE(lemma1_report(g, cd, cls).agree());
  }
}

TEST(RationalClassUnionTest, CyclicFiveExamples) {
  const Group g = build_group(GroupSpec::named("cyclic", {5}));
  const ClassData cd = conjugacy_classes(g);
  const std::vector<std::uint32_t> one_and_four{cd.class_of[power_of(1, 1, g)], cd.class_of[power_of(1, 4, g)]};
  const auto r = lemma1_report(g, cd, one_and_four);
  EXPECT_FALSE(r.power_closed);
  EXPECT_FALSE(r.union_of_rational_classes);
  std::vector<std::uint32_t> all{1, 2, 3, 4};
  EXPECT_TRUE(lemma1_report(g, cd, all).power_closed);
  EXPECT_TRUE(check_lemma1(g, cd, all));
}

// Exhaustive over class subsets of every small corpus group.
TEST(RationalClassUnionTest, AgreesOnAllClassUnions) {
  for (const auto& entry : testing_corpus::small_groups()) {
    const Group g = build_group(entry.spec);
    const ClassData cd = conjugacy_classes(g);
    if (cd.count() > 14) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cd.count()); ++mask)
      ASSERT_TRUE(check_lemma1(g, cd, classes_from_mask(mask, cd.count()))) << entry.name << " mask " << mask;
  }
}

TEST(PowerClosedTest, ClosureProperties) {
  for (const auto& entry : testing_corpus::small_groups()) {
    const Group g = build_group(entry.spec);
    SCOPED_TRACE(entry.name);
    for (Element x = 0; x < g.n; ++x) {
      const std::vector<Element> single{x};
      const auto closed = power_closure(single, g);
      ASSERT_TRUE(is_power_closed(closed, g));
      // Power-closed sets are inverse-closed.
      for (Element y : closed) ASSERT_TRUE(std::binary_search(closed.begin(), closed.end(), g.inverse(y)));
      EXPECT_EQ(power_closure(closed, g), closed);
    }
  }
}

// Shrinking Gamma coarsens nothing: every class for a subgroup H is contained
// in a class for any K containing H.
TEST(GammaClassesTest, RefinementIsMonotone) {
  for (const auto& entry : testing_corpus::small_groups()) {
    const Group g = build_group(entry.spec);
    const ClassData cd = conjugacy_classes(g);
    const auto subs = all_subgroups(cd.modulus);
    SCOPED_TRACE(entry.name);
    for (const auto& h : subs) {
      const auto fine = gamma_conjugacy_classes(g, cd, h);
      for (const auto& k : subs) {
        if (!std::includes(k.elements.begin(), k.elements.end(), h.elements.begin(), h.elements.end())) continue;
        const auto coarse = gamma_conjugacy_classes(g, cd, k);
        for (const auto& block : fine.class_groups)
          for (auto j : block) ASSERT_EQ(coarse.gamma_of_class[j], coarse.gamma_of_class[block.front()]);
      }
    }
  }
}

TEST(GammaClassesTest, IndependentOfGeneratingSet) {
  const Group g = build_group(GroupSpec::named("cyclic", {12}));
  const ClassData cd = conjugacy_classes(g);
  const auto a = gamma_conjugacy_classes(g, cd, subgroup_closure(12, {5, 7}));
  const auto b = gamma_conjugacy_classes(g, cd, subgroup_closure(12, {11, 7, 5}));
  EXPECT_EQ(a.class_groups, b.class_groups);
  EXPECT_EQ(a.class_of, b.class_of);
}

}  // namespace
}  // namespace cayley
